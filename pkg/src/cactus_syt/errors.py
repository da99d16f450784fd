class CapExceeded(RuntimeError):
    """A size cap was exceeded; the caller should switch to a counting-only path."""

    def __init__(self, what, size, cap):
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
        self.what = what
        self.size = size
        self.cap = cap
