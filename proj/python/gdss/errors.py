class GdssError(ValueError):
    """Domain error raised by the engine. ``code`` names the error kind."""

    @property
    def code(self):
        return self.args[0]

    def __str__(self):
        return f"{self.args[0]}: {self.args[1]}" if len(self.args) > 1 else super().__str__()
