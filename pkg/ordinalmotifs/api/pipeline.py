import logging
from collections import namedtuple

from ordinalmotifs.engine.basis_builder import BasisBuilder
from ordinalmotifs.engine.context import ClarificationMap
from ordinalmotifs.engine.explainer import Explainer
from ordinalmotifs.engine.motif_covering import HeuristicKind, MotifCovering
from ordinalmotifs.engine.motif_enumerator import (
    DEFAULT_CROWN_SIZE_CAP, EnumerationConfig, MotifEnumerator)
from ordinalmotifs.engine.scale import FAMILY_ORDER, ScaleFamily, build_scale
from ordinalmotifs.engine.scaling_dimension import ScalingDimension
from ordinalmotifs.utils.context_utils import read_context

logger = logging.getLogger(__name__)

PreparedContext = namedtuple("PreparedContext", ["context", "clarification"])


def setup_config(families=None, min_sizes=None, max_sizes=None, crown_cap=DEFAULT_CROWN_SIZE_CAP,
                 maximal_only=True, transpose=False, clarify=False):
    return Config(families, min_sizes, max_sizes, crown_cap, maximal_only, transpose, clarify)


def load_context(path, config, format="auto"):
    config.validation()
    return prepare_context(read_context(path, format), config)


def prepare_context(context, config):
    if config.transpose:
        context = context.transpose()
        logger.info("transposed: %d objects, %d attributes", *context.shape)
    if config.clarify:
        return PreparedContext(*context.clarify_objects())
    return PreparedContext(context, ClarificationMap.identity(context))


def run_motifs(context, config):
    config.validation()
    return MotifEnumerator.enumerate_inventory(context, config.enumeration_config())


def run_cover(context, config, k, heuristic=HeuristicKind.STANDARD):
    inventory = run_motifs(context, config)
    steps = MotifCovering.greedy_cover(context, inventory.pool(), k, heuristic)
    return inventory, steps


def run_family_curves(context, config, heuristic=HeuristicKind.STANDARD, k=None):
    """Greedy runs restricted to each family alone, plus the combined pool."""
    inventory = run_motifs(context, config)
    curves = {}
    for family in inventory.config.families:
        pool = [motif for motif in inventory.pool() if motif.family is family]
        curves[family.value] = MotifCovering.greedy_cover(context, pool, k, heuristic)
    curves["combined"] = MotifCovering.greedy_cover(context, inventory.pool(), k, heuristic)
    return curves


def run_explain(prepared, config, k, heuristic=HeuristicKind.STANDARD):
    _, steps = run_cover(prepared.context, config, k, heuristic)
    return Explainer.explain_covering(prepared.context, steps, clarification=prepared.clarification)


def run_basis(context, config, heuristic=HeuristicKind.STANDARD):
    _, steps = run_cover(context, config, None, heuristic)
    return BasisBuilder.build_basis(context, [step.motif for step in steps])


def run_scaling_dimension(context, scale_specs, max_d):
    scales = [build_scale(family, n) for family, n in scale_specs]
    return ScalingDimension.scaling_dimension(context, scales, max_d)


class Config(object):

    def __init__(self, families, min_sizes, max_sizes, crown_cap, maximal_only, transpose, clarify):
        self.families = FAMILY_ORDER if families is None else tuple(self.__family(f) for f in families)
        self.min_sizes = {self.__family(f): n for f, n in (min_sizes or {}).items()}
        self.max_sizes = {self.__family(f): n for f, n in (max_sizes or {}).items()}
        self.crown_cap = crown_cap
        self.maximal_only = maximal_only
        self.transpose = transpose
        self.clarify = clarify

    def enumeration_config(self):
        return EnumerationConfig(
            families=self.families,
            min_size=dict(self.min_sizes),
            max_size=dict(self.max_sizes),
            crown_size_cap=self.crown_cap,
            maximal_only=self.maximal_only)

    def validation(self):
        if not self.families:
            raise ValueError("At least one scale family is needed")
        for label, sizes in (("min", self.min_sizes), ("max", self.max_sizes)):
            for family, n in sizes.items():
                if n < 1:
                    raise ValueError("%s size of %s must be positive, got %d" % (label, family.value, n))
        self.enumeration_config()

    @staticmethod
    def __family(family):
        return family if isinstance(family, ScaleFamily) else ScaleFamily.from_name(family)
