"""Allow ``python -m hyperbounds``."""

from .cli import main

raise SystemExit(main())
