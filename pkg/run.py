"""
Main entry point untuk diagram engine
Jalankan dengan: python run.py <command> [flags], contoh: python run.py enumerate --family brauer --k 2 --l 2
"""

import sys

from diagram_engine.cli import main

if __name__ == "__main__":
    sys.exit(main())
