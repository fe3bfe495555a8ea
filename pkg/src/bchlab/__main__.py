import sys

from bchlab.cli import main

sys.exit(main())
