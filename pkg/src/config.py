"""
Configuration settings for the Leibniz CL-algebra verifier
"""
import os
import json

from sympy import Rational

# Base directory of the project
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

# Resources directory
RESOURCES_DIR = os.path.join(BASE_DIR, 'src', 'resources')
CATALOG_PATH = os.path.join(RESOURCES_DIR, 'catalog.json')

# Sampling of the "for all x" quantifier
DEFAULT_SEED = 0x5EED_CAFE_F00D_BEEF
DEFAULT_SAMPLES = 200
SAMPLE_RANGE = 9  # coordinates drawn from -9..9

# Parameter values sampled for the parametric families
PARAMETER_SAMPLES = (Rational(0), Rational(2), Rational(-1), Rational(1, 2))
LAMBDA_4_SAMPLES = (Rational(0), Rational(1), Rational(-1), Rational(2))

# UI Settings
ENABLE_COLORS = "NO_COLOR" not in os.environ
APP_NAME = "Leibniz CL Verifier"
VERSION = "1.0.0"


def load_catalog_data():
    """
    Load the catalog of structure-constant tables from JSON

    Returns:
        dict: The parsed catalog document, empty if the file is missing
    """
    try:
        with open(CATALOG_PATH, 'r', encoding='utf-8') as f:
            return json.load(f)
    except (FileNotFoundError, json.JSONDecodeError):
        return {}
