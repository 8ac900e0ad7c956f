import logging
from collections import namedtuple

import numpy as np

from ordinalmotifs.engine.exceptions import ContextMismatchError
from ordinalmotifs.utils.bitset_utils import from_indices, full_mask, iter_bits, to_indices

logger = logging.getLogger(__name__)

Concept = namedtuple("Concept", ["extent", "intent"])


class FormalContext:
  """Objects, attributes and a boolean incidence matrix of shape |G| x |M|.

  Object and attribute sets are ints used as bitsets over the index order of
  ``objects`` and ``attributes``. Instances are never mutated after
  construction; derived data (intents, attribute extents, extents) is cached.
  """

  OBJECTS = "objects"
  ATTRIBUTES = "attributes"

  def __init__(self, objects, attributes, incidence):
    self.objects = tuple(str(g) for g in objects)
    self.attributes = tuple(str(m) for m in attributes)
    self.__check_labels(self.objects, "object")
    self.__check_labels(self.attributes, "attribute")
    self.incidence = self.__to_matrix(incidence, len(self.objects), len(self.attributes))
    self.all_objects = full_mask(len(self.objects))
    self.all_attributes = full_mask(len(self.attributes))
    self._intents = tuple(from_indices(np.flatnonzero(row)) for row in self.incidence)
    self._attribute_extents = tuple(from_indices(np.flatnonzero(col)) for col in self.incidence.T)
    self._extents = None

  @property
  def shape(self):
    return len(self.objects), len(self.attributes)

  def object_intent(self, g):
    return self._intents[g]

  def attribute_extent(self, m):
    return self._attribute_extents[m]

  def derive(self, side, bits):
    if side == self.OBJECTS:
      return self.derive_objects(bits)
    if side == self.ATTRIBUTES:
      return self.derive_attributes(bits)
    raise ValueError("side must be %r or %r, got %r" % (self.OBJECTS, self.ATTRIBUTES, side))

  def derive_objects(self, objects):
    intent = self.all_attributes
    for g in iter_bits(objects):
      intent &= self._intents[g]
    return intent

  def derive_attributes(self, attributes):
    extent = self.all_objects
    for m in iter_bits(attributes):
      extent &= self._attribute_extents[m]
    return extent

  def object_closure(self, objects):
    return self.derive_attributes(self.derive_objects(objects))

  def attribute_closure(self, attributes):
    return self.derive_objects(self.derive_attributes(attributes))

  def is_extent(self, objects):
    return self.object_closure(objects) == objects

  def extents(self):
    if self._extents is None:
      self._extents = tuple(self.__next_closure_extents())
      logger.debug("enumerated %d extents of a %dx%d context", len(self._extents), *self.shape)
    return list(self._extents)

  def concepts(self):
    return [Concept(extent, self.derive_objects(extent)) for extent in self.extents()]

  def meet_irreducibles(self):
    extents = self.extents()
    irreducibles = []
    for extent in extents:
      if extent == self.all_objects: continue
      above = [other for other in extents if other != extent and other & extent == extent]
      meet = self.all_objects
      for other in above:
        meet &= other
      if meet != extent:
        irreducibles.append(extent)
    return irreducibles

  def transpose(self):
    return FormalContext(self.attributes, self.objects, self.incidence.T)

  def induced_subcontext(self, objects, attributes=None):
    rows = to_indices(objects)
    cols = to_indices(self.all_attributes if attributes is None else attributes)
    return FormalContext(
        [self.objects[g] for g in rows],
        [self.attributes[m] for m in cols],
        self.incidence[np.ix_(rows, cols)])

  def clarify_objects(self):
    groups = {}
    for g, intent in enumerate(self._intents):
      groups.setdefault(intent, []).append(g)
    representatives = sorted(members[0] for members in groups.values())
    members_of = {members[0]: members for members in groups.values()}
    clarification = ClarificationMap(
        [[self.objects[g] for g in members_of[rep]] for rep in representatives],
        [members_of[rep] for rep in representatives])
    if len(representatives) < len(self.objects):
      logger.info("clarification merged %d objects into %d", len(self.objects), len(representatives))
    return self.induced_subcontext(from_indices(representatives)), clarification

  def has_distinct_rows(self, objects):
    seen = {}
    for g in iter_bits(objects):
      other = seen.setdefault(self._intents[g], g)
      if other != g:
        return False, (other, g)
    return True, None

  def object_labels(self, objects):
    return [self.objects[g] for g in iter_bits(objects)]

  # serialize format : [objects, attributes, rows of 0/1]
  def serialize(self):
    return [list(self.objects), list(self.attributes), self.incidence.astype(int).tolist()]

  @classmethod
  def deserialize(self, serial):
    objects, attributes, rows = serial
    return self(objects, attributes, rows)

  def __eq__(self, other):
    return isinstance(other, FormalContext) and self.objects == other.objects \
        and self.attributes == other.attributes and np.array_equal(self.incidence, other.incidence)

  def __hash__(self):
    return hash((self.objects, self.attributes, self.incidence.tobytes()))

  def __repr__(self):
    return "FormalContext(%d objects, %d attributes)" % self.shape

  # NextClosure over objects; index 0 is the most significant element.
  def __next_closure_extents(self):
    current = self.object_closure(0)
    yield current
    while current != self.all_objects:
      current = self.__next_extent(current)
      yield current

  def __next_extent(self, current):
    for i in reversed(range(len(self.objects))):
      bit = 1 << i
      if current & bit:
        current ^= bit
        continue
      candidate = self.object_closure(current | bit)
      if candidate & ~current & (bit - 1) == 0:
        return candidate
    raise AssertionError("NextClosure ran past the last extent")

  @classmethod
  def __check_labels(self, labels, kind):
    seen = set()
    for label in labels:
      if label in seen:
        raise ContextMismatchError("duplicate %s label %r" % (kind, label))
      seen.add(label)

  @classmethod
  def __to_matrix(self, incidence, rows, cols):
    matrix = np.array(incidence, dtype=bool)
    if matrix.size == 0 and rows * cols == 0:
      matrix = np.zeros((rows, cols), dtype=bool)
    if matrix.shape != (rows, cols):
      raise ContextMismatchError(
          "incidence has shape %s but labels give %dx%d" % (matrix.shape, rows, cols))
    matrix.setflags(write=False)
    return matrix


class ClarificationMap:
  """Representative index of the clarified context -> merged original objects."""

  def __init__(self, groups, original_indices):
    self.groups = [tuple(group) for group in groups]
    self.original_indices = [tuple(indices) for indices in original_indices]

  @classmethod
  def identity(self, context):
    return self([[g] for g in context.objects], [[i] for i in range(len(context.objects))])

  def label(self, representative):
    return "/".join(self.groups[representative])

  def merged(self):
    return [group for group in self.groups if len(group) > 1]

  def is_identity(self):
    return all(len(group) == 1 for group in self.groups)

  def original_labels(self):
    return [label for group in self.groups for label in group]

  def __len__(self):
    return len(self.groups)
