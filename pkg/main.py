#!/usr/bin/env python3
"""
Main application entry point for flag-variety cohomology computations.

Equivalent to the ``flagcoh`` console script, e.g.::

    python main.py betti --type A3 --parabolic 1,3
"""

from flag_cohomology.cli import main


if __name__ == '__main__':
    main()
