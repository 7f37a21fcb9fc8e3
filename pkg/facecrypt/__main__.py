import sys

from facecrypt.main import main

sys.exit(main())
