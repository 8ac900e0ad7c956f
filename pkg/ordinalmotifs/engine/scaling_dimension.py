import logging
from itertools import combinations_with_replacement, product

from ordinalmotifs.engine.exceptions import SearchBoundError
from ordinalmotifs.utils.bitset_utils import from_indices, is_subset, iter_bits

logger = logging.getLogger(__name__)

MAX_OBJECTS = 8
MAX_DIMENSION = 4
MAX_MAPS = 2000000


class ScalingDimension:
  """Least number of scales whose semi-product admits a full scale-measure.

  The preimages of a semi-product's attribute extents are the preimages of
  the operands' attribute extents, so a tuple of scale-measures is full iff
  the union of their preimage families generates Ext(K) under intersection.
  That holds iff every meet-irreducible extent of K is itself a preimage,
  which reduces the search to covering the meet-irreducibles.
  """

  @classmethod
  def scaling_dimension(self, context, scales, max_d, max_objects=MAX_OBJECTS):
    self.__check_bounds(context, scales, max_d, max_objects)
    irreducibles = context.meet_irreducibles()
    target = (1 << len(irreducibles)) - 1
    masks = self.__maximal(self.irreducible_masks(context, scale, irreducibles) for scale in scales)
    logger.info("%d meet-irreducibles, %d distinct maximal scale-measures", len(irreducibles), len(masks))
    for d in range(1, max_d + 1):
      for choice in combinations_with_replacement(masks, d):
        union = 0
        for mask in choice:
          union |= mask
        if union == target:
          logger.info("scaling dimension %d", d)
          return d
      logger.info("no covering with %d scales", d)
    return None

  @classmethod
  def irreducible_masks(self, context, scale, irreducibles):
    """Masks over ``irreducibles`` hit by the scale-measures of ``context`` into ``scale``."""
    extents = set(context.extents())
    position = {extent: i for i, extent in enumerate(irreducibles)}
    n = len(context.objects)
    masks = set()
    for sigma in product(range(len(scale.objects)), repeat=n):
      fibers = [0] * len(scale.objects)
      for g, image in enumerate(sigma):
        fibers[image] |= 1 << g
      preimages = set()
      for m in range(len(scale.attributes)):
        preimage = 0
        for s in iter_bits(scale.attribute_extent(m)):
          preimage |= fibers[s]
        preimages.add(preimage)
      if preimages <= extents:
        masks.add(from_indices(position[p] for p in preimages if p in position))
    return masks

  @classmethod
  def __maximal(self, mask_sets):
    masks = set()
    for found in mask_sets:
      masks |= found
    return sorted(mask for mask in masks
                  if not any(other != mask and is_subset(mask, other) for other in masks))

  @classmethod
  def __check_bounds(self, context, scales, max_d, max_objects):
    n = len(context.objects)
    if n > max_objects:
      raise SearchBoundError("context has %d objects, the search allows at most %d" % (n, max_objects))
    if not 1 <= max_d <= MAX_DIMENSION:
      raise SearchBoundError("max_d must lie in 1..%d, got %d" % (MAX_DIMENSION, max_d))
    if not scales:
      raise SearchBoundError("no scales given")
    maps = sum(len(scale.objects) ** n for scale in scales)
    if maps > MAX_MAPS:
      raise SearchBoundError("%d candidate maps exceed the limit of %d" % (maps, MAX_MAPS))


scaling_dimension = ScalingDimension.scaling_dimension
