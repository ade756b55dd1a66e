"""
Setup script for the Leibniz CL verifier
"""
from setuptools import setup, find_packages

setup(
    name="leibniz-cl-verifier",
    version="1.0.0",
    description="Exact-arithmetic checks of centralizers and CL-algebras for finite-dimensional Leibniz algebras",
    packages=find_packages(exclude=["tests"]),
    include_package_data=True,
    package_data={
        "src": ["resources/*.json"],
    },
    install_requires=[
        "colorama",  # For cross-platform color support
        "tabulate",  # For report tables
        "sympy>=1.13",  # Exact fields Q and Q(a), DomainMatrix elimination
    ],
    extras_require={
        "test": ["pytest>=7.0", "hypothesis"],
    },
    entry_points={
        "console_scripts": [
            "leibniz-cl=src.main:main",
        ]
    },
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
    ],
    python_requires=">=3.8",
)
