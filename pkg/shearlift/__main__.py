#!/usr/bin/env python3
"""
@brief Entry point for python -m shearlift
@file __main__.py
"""

from shearlift.cli import main

if __name__ == "__main__":
    main()
