from enum import Enum
from functools import lru_cache
from itertools import product

import numpy as np

from ordinalmotifs.engine.context import FormalContext
from ordinalmotifs.engine.exceptions import ContextMismatchError, ScaleSizeError


class ScaleFamily(Enum):

  NOMINAL       = "nominal"
  ORDINAL       = "ordinal"
  INTERORDINAL  = "interordinal"
  CONTRANOMINAL = "contranominal"
  CROWN         = "crown"

  @property
  def rank(self):
    return FAMILY_ORDER.index(self)

  @property
  def min_size(self):
    return 3 if self is ScaleFamily.CROWN else 1

  @property
  def hereditary(self):
    return self in (ScaleFamily.NOMINAL, ScaleFamily.INTERORDINAL, ScaleFamily.CONTRANOMINAL)

  @classmethod
  def from_name(self, name):
    try:
      return self(name.strip().lower())
    except ValueError:
      known = ", ".join(f.value for f in FAMILY_ORDER)
      raise ValueError("unknown scale family %r (known: %s)" % (name, known)) from None

  def __lt__(self, other):
    return self.rank < other.rank


FAMILY_ORDER = (
    ScaleFamily.NOMINAL,
    ScaleFamily.ORDINAL,
    ScaleFamily.INTERORDINAL,
    ScaleFamily.CONTRANOMINAL,
    ScaleFamily.CROWN,
)


class ScaleBuilder:

  INCIDENCE = {
      ScaleFamily.NOMINAL: lambda a, b, n: a == b,
      ScaleFamily.ORDINAL: lambda a, b, n: a <= b,
      ScaleFamily.CONTRANOMINAL: lambda a, b, n: a != b,
      ScaleFamily.CROWN: lambda a, b, n: a == b or b == a + 1 or (a, b) == (n, 1),
  }

  @classmethod
  def build(self, family, n):
    self.check_size(family, n)
    labels = [str(i) for i in range(1, n + 1)]
    if family is ScaleFamily.INTERORDINAL:
      attributes = ["≤%d" % i for i in range(1, n + 1)] + ["≥%d" % i for i in range(1, n + 1)]
      rows = [[a <= b for b in range(1, n + 1)] + [a >= b for b in range(1, n + 1)]
              for a in range(1, n + 1)]
      return FormalContext(labels, attributes, rows)
    relation = self.INCIDENCE[family]
    rows = [[relation(a, b, n) for b in range(1, n + 1)] for a in range(1, n + 1)]
    return FormalContext(labels, labels, rows)

  @classmethod
  def expected_extent_count(self, family, n):
    self.check_size(family, n)
    if family is ScaleFamily.NOMINAL:
      return 1 if n == 1 else n + 2
    if family is ScaleFamily.ORDINAL:
      return n
    if family is ScaleFamily.INTERORDINAL:
      return 1 if n == 1 else n * (n + 1) // 2 + 1
    if family is ScaleFamily.CONTRANOMINAL:
      return 2 ** n
    return 8 if n == 3 else 2 * n + 2

  @classmethod
  def check_size(self, family, n):
    if n < family.min_size:
      raise ScaleSizeError("%s scales need size >= %d, got %d" % (family.value, family.min_size, n))


@lru_cache(maxsize=None)
def build_scale(family, n):
  return ScaleBuilder.build(family, n)


@lru_cache(maxsize=None)
def scale_extents(family, n):
  return tuple(build_scale(family, n).extents())


def expected_extent_count(family, n):
  return ScaleBuilder.expected_extent_count(family, n)


def apposition(*contexts, tags=None):
  if not contexts:
    raise ContextMismatchError("apposition needs at least one context")
  tags = list(tags) if tags is not None else [str(i) for i in range(1, len(contexts) + 1)]
  if len(tags) != len(contexts):
    raise ContextMismatchError("got %d tags for %d contexts" % (len(tags), len(contexts)))
  objects = contexts[0].objects
  for other in contexts[1:]:
    if other.objects != objects:
      raise ContextMismatchError("apposition needs identical object lists")
  attributes = ["%s:%s" % (tag, m) for tag, ctx in zip(tags, contexts) for m in ctx.attributes]
  incidence = np.hstack([ctx.incidence for ctx in contexts]) if objects else \
      np.zeros((0, len(attributes)), dtype=bool)
  return FormalContext(objects, attributes, incidence)


def semiproduct(scales):
  """Objects are tuples of operand objects; (g_1..g_d) has (j, m) iff g_j has m in operand j."""
  if not scales:
    raise ContextMismatchError("semi-product needs at least one operand")
  index_tuples = list(product(*[range(len(s.objects)) for s in scales]))
  if len(scales) == 1:
    objects = list(scales[0].objects)
  else:
    objects = ["(%s)" % ",".join(s.objects[i] for s, i in zip(scales, t)) for t in index_tuples]
  attributes = ["%d:%s" % (j, m) for j, s in enumerate(scales, 1) for m in s.attributes]
  if not index_tuples:
    return FormalContext(objects, attributes, np.zeros((0, len(attributes)), dtype=bool))
  components = np.array(index_tuples, dtype=int).reshape(len(index_tuples), len(scales))
  blocks = [s.incidence[components[:, j], :] for j, s in enumerate(scales)]
  return FormalContext(objects, attributes, np.hstack(blocks))


def parse_scale_specs(text):
  """Parse "ordinal:3,nominal:1-4" into [(ORDINAL, 3), (NOMINAL, 1), ..., (NOMINAL, 4)]."""
  specs = []
  for part in filter(None, (p.strip() for p in text.split(","))):
    name, sep, sizes = part.partition(":")
    if not sep:
      raise ValueError("scale spec %r must look like family:n or family:a-b" % part)
    family = ScaleFamily.from_name(name)
    low, dash, high = sizes.partition("-")
    try:
      first, last = int(low), int(high) if dash else int(low)
    except ValueError:
      raise ValueError("scale spec %r has a non-integer size" % part) from None
    for n in range(first, last + 1):
      ScaleBuilder.check_size(family, n)
      specs.append((family, n))
  if not specs:
    raise ValueError("no scales given")
  return specs
