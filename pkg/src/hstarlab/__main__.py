import sys

from hstarlab.cli import main

sys.exit(main())
