import sys

from actsched.cli import main

sys.exit(main())
