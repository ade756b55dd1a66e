#!/usr/bin/env python3
"""
Leibniz CL Verifier
A CLI for exact centralizer, nilpotency and CL-algebra checks on Leibniz algebras
"""
import sys
from src.ui.cli import run_cli
from src.ui.display import display_error

def main(argv=None):
    """
    Main application entry point

    Args:
        argv: Argument list; sys.argv[1:] when None

    Returns:
        int: Exit code
    """
    try:
        return run_cli(argv)

    except KeyboardInterrupt:
        print("\nInterrupted.", file=sys.stderr)
        return 130

    except Exception as e:
        display_error(f"An unexpected error occurred: {str(e)}")
        return 1

if __name__ == "__main__":
    sys.exit(main())
