import sys

from walled_brauer.main import main

sys.exit(main())
