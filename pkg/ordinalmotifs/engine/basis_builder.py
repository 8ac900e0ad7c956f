import logging

import numpy as np

from ordinalmotifs.engine.context import FormalContext
from ordinalmotifs.engine.exceptions import IncompleteCoveringError
from ordinalmotifs.engine.motif_covering import MotifCovering
from ordinalmotifs.engine.scale import apposition, build_scale, scale_extents
from ordinalmotifs.utils.bitset_utils import iter_bits, to_indices

logger = logging.getLogger(__name__)


class BasisBuilder:
  """Apposition of one context per covering motif.

  For motif i onto scale O_i, object g has attribute "i:m" iff g lies in the
  closure of the preimage of m's extent in O_i. A covered extent that the
  apposition does not generate (the closure of a preimage of a scale extent
  that is no attribute extent, e.g. the scale's top) gets its own column
  "i:{a,b,...}" named after that scale extent.
  """

  @classmethod
  def build_basis(self, context, covering):
    covering = list(covering)
    self.check_complete(context, covering)
    basis = apposition(*[self.__motif_part(context, motif) for motif in covering])
    basis = self.__complete(context, covering, basis)
    logger.info("basis of %d motifs has %d attributes", len(covering), len(basis.attributes))
    return basis

  @classmethod
  def check_complete(self, context, covering):
    extents = set(context.extents())
    covered = set()
    for motif in covering:
      covered |= MotifCovering.covered_extents(context, motif)
    uncovered = len(extents - covered)
    if uncovered:
      raise IncompleteCoveringError(uncovered, len(extents))

  @classmethod
  def __motif_part(self, context, motif):
    scale = build_scale(motif.family, motif.size)
    columns = [context.object_closure(motif.preimage(scale.attribute_extent(m)))
               for m in range(len(scale.attributes))]
    return FormalContext(context.objects, scale.attributes, self.__matrix(context, columns))

  @classmethod
  def __complete(self, context, covering, basis):
    missing = set(context.extents()) - set(basis.extents())
    if not missing:
      return basis
    labels, columns = [], []
    for i, motif in enumerate(covering, 1):
      scale = build_scale(motif.family, motif.size)
      for extent in scale_extents(motif.family, motif.size):
        closure = context.object_closure(motif.preimage(extent))
        if closure in missing:
          missing.discard(closure)
          labels.append("%d:{%s}" % (i, ",".join(scale.objects[s] for s in iter_bits(extent))))
          columns.append(closure)
    logger.info("apposition missed %d covered extents; added them as columns", len(columns))
    return FormalContext(
        basis.objects, basis.attributes + tuple(labels),
        np.hstack([basis.incidence, self.__matrix(context, columns)]))

  @classmethod
  def __matrix(self, context, columns):
    matrix = np.zeros((len(context.objects), len(columns)), dtype=bool)
    for m, extent in enumerate(columns):
      matrix[to_indices(extent), m] = True
    return matrix


build_basis = BasisBuilder.build_basis
