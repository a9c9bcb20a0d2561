import sys

from shufflebits.cli import main

sys.exit(main())
