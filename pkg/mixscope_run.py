#!/usr/bin/python

# Runs one mixscope experiment, see "mixscope_run.py --help".
import sys

from mixscope.Cli import main


if __name__ == "__main__":
    sys.exit(main())
