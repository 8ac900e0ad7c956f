class OrdinalMotifError(Exception):
  pass


class ContextFormatError(OrdinalMotifError, ValueError):

  def __init__(self, message, line=None):
    self.message = message
    self.line = line
    super().__init__(str(self))

  def __str__(self):
    if self.line is None: return self.message
    return "line %d: %s" % (self.line, self.message)


class ContextMismatchError(OrdinalMotifError, ValueError):
  pass


class ScaleSizeError(OrdinalMotifError, ValueError):
  pass


class UnclarifiedDomainError(OrdinalMotifError, ValueError):

  def __init__(self, first, second):
    self.pair = (first, second)
    super().__init__(
        "objects %d and %d have identical rows; clarify the context first" % (first, second))


class IncompleteCoveringError(OrdinalMotifError, ValueError):

  def __init__(self, uncovered, total):
    self.uncovered = uncovered
    self.total = total
    super().__init__(
        "covering misses %d of %d extents" % (uncovered, total))


class SearchBoundError(OrdinalMotifError, ValueError):
  pass


class LabelResolutionError(OrdinalMotifError, KeyError):

  def __str__(self):
    return str(self.args[0]) if self.args else "unresolvable label"
