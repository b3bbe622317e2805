"""One module per subcommand; each exposes register(subparsers) and run(args) -> Report."""

from . import compare, corpus, presentation, reproduce, salvetti

COMMANDS = (presentation, compare, salvetti, reproduce, corpus)
