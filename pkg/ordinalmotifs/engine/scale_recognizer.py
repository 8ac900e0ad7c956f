from dataclasses import dataclass
from typing import Tuple

import networkx as nx

from ordinalmotifs.engine.exceptions import ContextMismatchError, UnclarifiedDomainError
from ordinalmotifs.engine.scale import FAMILY_ORDER, ScaleBuilder, ScaleFamily, build_scale, scale_extents
from ordinalmotifs.utils.bitset_utils import from_indices, iter_bits, popcount, to_indices


@dataclass(frozen=True, eq=False)
class Motif:
  """A local full scale-measure: position i of ``domain`` maps to scale object i+1."""

  family: ScaleFamily
  domain: Tuple[int, ...]

  @property
  def size(self):
    return len(self.domain)

  @property
  def domain_bits(self):
    return from_indices(self.domain)

  @property
  def key(self):
    return self.family, frozenset(self.domain)

  @property
  def sort_key(self):
    return self.family.rank, tuple(sorted(self.domain))

  def preimage(self, scale_objects):
    return from_indices(self.domain[i] for i in iter_bits(scale_objects))

  def __eq__(self, other):
    return isinstance(other, Motif) and self.key == other.key

  def __hash__(self):
    return hash(self.key)


class ScaleRecognizer:

  @classmethod
  def verify_scale_measure(self, context, sigma, scale):
    fibers = self.__fibers(context, sigma, scale)
    for m in range(len(scale.attributes)):
      if not context.is_extent(self.__preimage(fibers, scale.attribute_extent(m))):
        return False
    return True

  @classmethod
  def verify_full(self, context, sigma, scale):
    fibers = self.__fibers(context, sigma, scale)
    preimages = {self.__preimage(fibers, extent) for extent in scale.extents()}
    return preimages == set(context.extents())

  @classmethod
  def recognize(self, context, domain, family):
    n = popcount(domain)
    ScaleBuilder.check_size(family, n)
    distinct, pair = context.has_distinct_rows(domain)
    if not distinct:
      raise UnclarifiedDomainError(*pair)
    order = self.__dispatch(context, domain, family)
    if order is None:
      return None
    return Motif(family, tuple(order))

  @classmethod
  def is_local_full(self, context, motif):
    domain = motif.domain_bits
    subcontext = context.induced_subcontext(domain)
    position = {g: i for i, g in enumerate(motif.domain)}
    sigma = [position[g] for g in iter_bits(domain)]
    return self.verify_full(subcontext, sigma, build_scale(motif.family, motif.size))

  @classmethod
  def realized_families(self, context, domain, families=FAMILY_ORDER):
    n = popcount(domain)
    return [family for family in sorted(families)
            if n >= family.min_size and self.recognize(context, domain, family) is not None]

  @classmethod
  def __dispatch(self, context, domain, family):
    if family is ScaleFamily.NOMINAL:
      return self.__recognize_nominal(context, domain)
    if family is ScaleFamily.ORDINAL:
      return self.__recognize_ordinal(context, domain)
    if family is ScaleFamily.INTERORDINAL:
      return self.__recognize_interordinal(context, domain)
    if family is ScaleFamily.CONTRANOMINAL:
      return self.__recognize_contranominal(context, domain)
    if family is ScaleFamily.CROWN:
      return self.__recognize_crown(context, domain)
    raise ValueError("Unexpected scale family %s" % family)

  @classmethod
  def __recognize_nominal(self, context, domain):
    members = to_indices(domain)
    if len(members) == 1:
      return members if not self.__is_closed(context, domain, 0) else None
    if not self.__is_closed(context, domain, 0):
      return None
    if not all(self.__is_closed(context, domain, 1 << g) for g in members):
      return None
    for i, g in enumerate(members):
      for h in members[i + 1:]:
        if self.__closure(context, domain, 1 << g | 1 << h) != domain:
          return None
    return members

  @classmethod
  def __recognize_ordinal(self, context, domain):
    if self.__is_closed(context, domain, 0):
      return None
    closures = {g: self.__closure(context, domain, 1 << g) for g in iter_bits(domain)}
    chain = sorted(closures, key=lambda g: popcount(closures[g]))
    below = 0
    for position, g in enumerate(chain, 1):
      extent = closures[g]
      if popcount(extent) != position or below & ~extent:
        return None
      below = extent
    return chain

  @classmethod
  def __recognize_interordinal(self, context, domain):
    members = to_indices(domain)
    if len(members) == 1:
      return members if not self.__is_closed(context, domain, 0) else None
    graph = nx.Graph()
    graph.add_nodes_from(members)
    for i, g in enumerate(members):
      for h in members[i + 1:]:
        if self.__is_closed(context, domain, 1 << g | 1 << h):
          graph.add_edge(g, h)
    if graph.number_of_edges() != len(members) - 1 or not nx.is_connected(graph):
      return None
    if max(degree for _, degree in graph.degree()) > 2:
      return None
    start = min(g for g, degree in graph.degree() if degree == 1)
    path = list(nx.dfs_preorder_nodes(graph, start))
    for order in (path, path[::-1]):
      if self.__is_full_on(context, domain, order, ScaleFamily.INTERORDINAL):
        return order
    return None

  @classmethod
  def __recognize_contranominal(self, context, domain):
    members = to_indices(domain)
    if all(self.__is_closed(context, domain, domain ^ 1 << g) for g in members):
      return members
    return None

  @classmethod
  def __recognize_crown(self, context, domain):
    members = to_indices(domain)
    graph = nx.Graph()
    graph.add_nodes_from(members)
    for i, g in enumerate(members):
      for h in members[i + 1:]:
        if self.__closure(context, domain, 1 << g | 1 << h) != domain:
          graph.add_edge(g, h)
    if any(degree != 2 for _, degree in graph.degree()) or not nx.is_connected(graph):
      return None
    order = [members[0], min(graph.neighbors(members[0]))]
    while len(order) < len(members):
      order.append(next(h for h in graph.neighbors(order[-1]) if h != order[-2]))
    if self.__is_full_on(context, domain, order, ScaleFamily.CROWN):
      return order
    return None

  @classmethod
  def __is_full_on(self, context, domain, order, family):
    local_extents = {domain & extent for extent in context.extents()}
    images = {from_indices(order[i] for i in iter_bits(extent))
              for extent in scale_extents(family, len(order))}
    return images == local_extents

  @classmethod
  def __closure(self, context, domain, objects):
    return domain & context.object_closure(objects)

  @classmethod
  def __is_closed(self, context, domain, objects):
    return self.__closure(context, domain, objects) == objects

  @classmethod
  def __fibers(self, context, sigma, scale):
    if len(sigma) != len(context.objects):
      raise ContextMismatchError("map covers %d of %d objects" % (len(sigma), len(context.objects)))
    fibers = [0] * len(scale.objects)
    for g, image in enumerate(sigma):
      fibers[image] |= 1 << g
    return fibers

  @classmethod
  def __preimage(self, fibers, scale_objects):
    preimage = 0
    for s in iter_bits(scale_objects):
      preimage |= fibers[s]
    return preimage


verify_scale_measure = ScaleRecognizer.verify_scale_measure
verify_full = ScaleRecognizer.verify_full
recognize = ScaleRecognizer.recognize
is_local_full = ScaleRecognizer.is_local_full
realized_families = ScaleRecognizer.realized_families
