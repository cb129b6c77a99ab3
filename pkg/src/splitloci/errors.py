class SplitLociError(ValueError):
    """Domain error raised by every module; the CLI maps it to exit code 1."""
