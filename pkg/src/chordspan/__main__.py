import sys

from chordspan.cli import main

sys.exit(main())
