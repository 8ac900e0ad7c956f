import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Tuple

import pandas as pd

from ordinalmotifs.engine.scale import expected_extent_count, scale_extents
from ordinalmotifs.engine.scale_recognizer import Motif, ScaleRecognizer
from ordinalmotifs.utils.bitset_utils import from_indices, popcount

logger = logging.getLogger(__name__)


class HeuristicKind(Enum):

  STANDARD   = "standard"
  NORMALIZED = "normalized"

  @classmethod
  def from_name(self, name):
    try:
      return self(name.strip().lower())
    except ValueError:
      raise ValueError("unknown heuristic %r (known: standard, normalized)" % name) from None


@dataclass(frozen=True)
class CoveringStep:
  """One greedy selection.

  ``covered`` is a bitset over indices into ``context.extents()`` holding every
  extent the motif covers, including the ones covered earlier.
  """

  step: int
  motif: Motif
  new_extents: int
  cumulative: int
  score: object
  families: Tuple
  covered: int


class MotifCovering:

  @classmethod
  def covered_extents(self, context, motif):
    return {context.object_closure(motif.preimage(extent))
            for extent in scale_extents(motif.family, motif.size)}

  @classmethod
  def greedy_cover(self, context, motifs, k, heuristic=HeuristicKind.STANDARD):
    if k is not None and k < 0:
      raise ValueError("k must be >= 0, got %d" % k)
    index = {extent: i for i, extent in enumerate(context.extents())}
    candidates = [(motif, from_indices(index[extent] for extent in self.covered_extents(context, motif)))
                  for motif in sorted(set(motifs), key=lambda motif: motif.sort_key)]
    pool_families = sorted({motif.family for motif, _ in candidates})
    covered, steps = 0, []
    while k is None or len(steps) < k:
      best = self.__select(candidates, covered, heuristic)
      if best is None:
        break
      motif, mask, gain, score = best
      covered |= mask
      families = tuple(ScaleRecognizer.realized_families(context, motif.domain_bits, pool_families))
      steps.append(CoveringStep(len(steps) + 1, motif, gain, popcount(covered), score, families, mask))
      logger.info("step %d: %s of size %d adds %d (total %d of %d)",
                  len(steps), motif.family.value, motif.size, gain, popcount(covered), len(index))
    return steps

  @classmethod
  def family_ratios(self, steps, up_to=None):
    up_to = len(steps) if up_to is None else up_to
    if not 0 <= up_to <= len(steps):
      raise ValueError("up_to must lie in 0..%d, got %d" % (len(steps), up_to))
    ratios = {}
    for step in steps[:up_to]:
      for family in step.families:
        ratios[family] = ratios.get(family, 0) + Fraction(1, len(step.families))
    if not up_to:
      return {}
    return {family: ratios[family] / up_to for family in sorted(ratios)}

  @classmethod
  def coverage_curve(self, steps):
    return pd.DataFrame(
        [(step.step, step.new_extents, step.cumulative) for step in steps],
        columns=["step", "new", "cumulative"])

  @classmethod
  def __select(self, candidates, covered, heuristic):
    best, best_key, scores = None, None, []
    for motif, mask in candidates:
      gain = popcount(mask & ~covered)
      if not gain:
        continue
      if heuristic is HeuristicKind.NORMALIZED:
        score = Fraction(gain, expected_extent_count(motif.family, motif.size))
      else:
        score = gain
      scores.append(score)
      key = (-score, motif.sort_key)
      if best_key is None or key < best_key:
        best, best_key = (motif, mask, gain, score), key
    if best is not None and scores.count(best[3]) > 1:
      logger.debug("%d candidates tie at score %s", scores.count(best[3]), best[3])
    return best


covered_extents = MotifCovering.covered_extents
greedy_cover = MotifCovering.greedy_cover
family_ratios = MotifCovering.family_ratios
coverage_curve = MotifCovering.coverage_curve
