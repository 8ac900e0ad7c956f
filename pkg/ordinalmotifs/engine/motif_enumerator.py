import logging
from collections import namedtuple
from dataclasses import dataclass, field
from itertools import combinations, groupby
from typing import Dict, Optional, Tuple

import networkx as nx

from ordinalmotifs.engine.exceptions import UnclarifiedDomainError
from ordinalmotifs.engine.scale import FAMILY_ORDER, ScaleFamily
from ordinalmotifs.engine.scale_recognizer import ScaleRecognizer
from ordinalmotifs.utils.bitset_utils import from_indices, is_subset, popcount, to_indices

logger = logging.getLogger(__name__)

FamilyStats = namedtuple("FamilyStats", ["total", "maximal", "largest"])

DEFAULT_MIN_SIZE = {family: 3 if family is ScaleFamily.CROWN else 2 for family in FAMILY_ORDER}
DEFAULT_CROWN_SIZE_CAP = 8


@dataclass
class EnumerationConfig:
  """Which families to search and the domain sizes to report.

  ``max_size`` maps a family to an upper bound; a missing entry means the
  number of objects. Crown domains are additionally bounded by
  ``crown_size_cap``.
  """

  families: Tuple[ScaleFamily, ...] = FAMILY_ORDER
  min_size: Dict[ScaleFamily, int] = field(default_factory=lambda: dict(DEFAULT_MIN_SIZE))
  max_size: Dict[ScaleFamily, Optional[int]] = field(default_factory=dict)
  crown_size_cap: int = DEFAULT_CROWN_SIZE_CAP
  maximal_only: bool = True

  def __post_init__(self):
    self.families = tuple(sorted(set(self.families)))
    self.min_size = {**DEFAULT_MIN_SIZE, **self.min_size}
    for family in self.families:
      low, high = self.min_size[family], self.max_size.get(family)
      if low < family.min_size:
        raise ValueError("min size of %s must be >= %d, got %d" % (family.value, family.min_size, low))
      if high is not None and high < low:
        raise ValueError("max size %d of %s is below its min size %d" % (high, family.value, low))
    if self.crown_size_cap < ScaleFamily.CROWN.min_size:
      raise ValueError("crown size cap must be >= 3, got %d" % self.crown_size_cap)

  @classmethod
  def default(self):
    return self()

  def bounds(self, family, n_objects):
    high = self.max_size.get(family)
    high = n_objects if high is None else min(high, n_objects)
    if family is ScaleFamily.CROWN:
      high = min(high, self.crown_size_cap)
    return self.min_size[family], high


@dataclass
class MotifInventory:
  motifs: Dict[ScaleFamily, list]
  maximal: Dict[ScaleFamily, list]
  config: EnumerationConfig

  @property
  def stats(self):
    return MotifEnumerator.motif_stats(self)

  def pool(self, maximal_only=None):
    """Candidate motifs of every family in rank order."""
    if maximal_only is None:
      maximal_only = self.config.maximal_only
    source = self.maximal if maximal_only else self.motifs
    return [motif for family in self.config.families for motif in source.get(family, [])]


class MotifEnumerator:

  @classmethod
  def enumerate_inventory(self, context, config=None):
    config = config or EnumerationConfig.default()
    motifs, maximal = {}, {}
    for family in config.families:
      if family is ScaleFamily.CROWN:
        found = self.enumerate_crowns(context, config)
      else:
        found = self.enumerate_hereditary(context, family, config)
      motifs[family] = found
      maximal[family] = self.maximal_filter(found, family)
      logger.info("%s: %d motifs, %d maximal", family.value, len(found), len(maximal[family]))
    return MotifInventory(motifs, maximal, config)

  @classmethod
  def enumerate_hereditary(self, context, family, config):
    if family is ScaleFamily.CROWN:
      raise ValueError("crowns are enumerated by enumerate_crowns")
    self.__require_clarified(context)
    low, high = config.bounds(family, len(context.objects))
    if high < low:
      return []
    if family is ScaleFamily.ORDINAL:
      levels = self.__extension_levels(context, family, high)
    else:
      levels = self.__apriori_levels(context, family, low, high)
    motifs = [motif for level in levels for motif in level if motif.size >= low]
    return sorted(motifs, key=lambda motif: motif.sort_key)

  @classmethod
  def enumerate_crowns(self, context, config):
    self.__require_clarified(context)
    low, high = config.bounds(ScaleFamily.CROWN, len(context.objects))
    if high < low:
      return []
    graph = self.overlap_graph(context)
    found = {}
    for start in sorted(graph.nodes):
      self.__grow_cycle(context, graph, [start], [], [], low, high, found)
    logger.info("crown search: %d crowns of size %d..%d", len(found), low, high)
    return sorted(found.values(), key=lambda motif: motif.sort_key)

  @classmethod
  def overlap_graph(self, context):
    """Objects with incomparable intents that share at least one attribute."""
    graph = nx.Graph()
    graph.add_nodes_from(range(len(context.objects)))
    for g, h in combinations(range(len(context.objects)), 2):
      a, b = context.object_intent(g), context.object_intent(h)
      if a & b and self.__incomparable(a, b):
        graph.add_edge(g, h)
    return graph

  @classmethod
  def maximal_filter(self, motifs, family):
    domains = {motif.domain_bits for motif in motifs}
    if family.hereditary:
      universe = to_indices(from_indices(g for motif in motifs for g in motif.domain))
      return [motif for motif in motifs
              if not any(motif.domain_bits | 1 << g in domains
                         for g in universe if not motif.domain_bits >> g & 1)]
    by_size = sorted(domains, key=popcount, reverse=True)
    maximal = []
    for motif in motifs:
      bits, size = motif.domain_bits, motif.size
      if not any(popcount(other) > size and is_subset(bits, other) for other in by_size):
        maximal.append(motif)
    return maximal

  @classmethod
  def motif_stats(self, inventory):
    stats = {}
    for family in inventory.config.families:
      motifs = inventory.motifs.get(family, [])
      stats[family] = FamilyStats(
          len(motifs),
          len(inventory.maximal.get(family, [])),
          max((motif.size for motif in motifs), default=0))
    return stats

  @classmethod
  def __apriori_levels(self, context, family, low, high):
    n = len(context.objects)
    if low <= 1:
      yield self.__test_all(context, family, [(g,) for g in range(n)]).values()
    if high < 2:
      return
    level = self.__test_all(context, family, combinations(range(n), 2))
    logger.info("%s level 2: %d motifs", family.value, len(level))
    yield level.values()
    size = 2
    while level and size < high:
      size += 1
      candidates = [candidate for candidate in self.__join(sorted(level))
                    if all(subset in level for subset in combinations(candidate, size - 1))]
      level = self.__test_all(context, family, candidates)
      logger.info("%s level %d: %d candidates, %d motifs", family.value, size, len(candidates), len(level))
      yield level.values()

  @classmethod
  def __extension_levels(self, context, family, high):
    n = len(context.objects)
    level = self.__test_all(context, family, [(g,) for g in range(n)])
    yield level.values()
    size = 1
    while level and size < high:
      size += 1
      candidates = {tuple(sorted(domain + (g,))) for domain in level for g in range(n) if g not in domain}
      level = self.__test_all(context, family, sorted(candidates))
      logger.info("%s level %d: %d candidates, %d motifs", family.value, size, len(candidates), len(level))
      yield level.values()

  @classmethod
  def __test_all(self, context, family, candidates):
    level = {}
    for candidate in candidates:
      motif = ScaleRecognizer.recognize(context, from_indices(candidate), family)
      if motif is not None:
        level[candidate] = motif
    return level

  @classmethod
  def __join(self, domains):
    for _, group in groupby(domains, key=lambda domain: domain[:-1]):
      group = list(group)
      for i, first in enumerate(group):
        for second in group[i + 1:]:
          yield first + second[-1:]

  # path p_1..p_k grows by v > p_1; the pair (p_1, p_k) stays undecided until
  # the cycle closes or the path grows past it.
  @classmethod
  def __grow_cycle(self, context, graph, path, adjacent_meets, separated_meets, low, high, found):
    intent = context.object_intent
    last = path[-1]
    if len(path) >= low and graph.has_edge(last, path[0]) and path[1] < last:
      meet = intent(path[0]) & intent(last)
      if all(meet & ~intent(x) for x in path[1:-1]):
        self.__record_crown(context, path, found)
    if len(path) >= high:
      return
    for v in sorted(graph.neighbors(last)):
      if v <= path[0] or v in path:
        continue
      a = intent(v)
      if not all(self.__incomparable(a, intent(x)) for x in path):
        continue
      if any(meet & ~a == 0 for meet in adjacent_meets):
        continue
      if any(meet & ~a for meet in separated_meets):
        continue
      new_meet = intent(last) & a
      if any(new_meet & ~intent(x) == 0 for x in path[:-1]):
        continue
      members = path + [v]
      new_separated = [intent(x) & a for x in path[1:-1]]
      if len(path) >= 3:
        new_separated.append(intent(path[0]) & intent(last))
      if any(meet & ~intent(x) for meet in new_separated for x in members):
        continue
      self.__grow_cycle(context, graph, members, adjacent_meets + [new_meet],
                        separated_meets + new_separated, low, high, found)

  @classmethod
  def __record_crown(self, context, path, found):
    key = frozenset(path)
    if key in found:
      return
    motif = ScaleRecognizer.recognize(context, from_indices(path), ScaleFamily.CROWN)
    if motif is not None:
      found[key] = motif
    else:
      logger.debug("cycle %s rejected by the crown check", path)

  @classmethod
  def __incomparable(self, a, b):
    return a & ~b != 0 and b & ~a != 0

  @classmethod
  def __require_clarified(self, context):
    distinct, pair = context.has_distinct_rows(context.all_objects)
    if not distinct:
      raise UnclarifiedDomainError(*pair)


enumerate_inventory = MotifEnumerator.enumerate_inventory
enumerate_hereditary = MotifEnumerator.enumerate_hereditary
enumerate_crowns = MotifEnumerator.enumerate_crowns
maximal_filter = MotifEnumerator.maximal_filter
motif_stats = MotifEnumerator.motif_stats
