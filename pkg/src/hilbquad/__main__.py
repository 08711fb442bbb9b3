import sys

from hilbquad.cli import main

sys.exit(main())
