import sys

from ordpoly.cli import main

sys.exit(main())
