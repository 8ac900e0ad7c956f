import json
from fractions import Fraction

from ordinalmotifs.engine.context import FormalContext
from ordinalmotifs.engine.data_encoder import SCHEMA_VERSION, DataEncoder
from ordinalmotifs.engine.explainer import explain_covering
from ordinalmotifs.engine.motif_covering import HeuristicKind, greedy_cover
from ordinalmotifs.engine.motif_enumerator import enumerate_inventory
from ordinalmotifs.engine.scale import ScaleFamily
from ordinalmotifs.engine.scale_recognizer import Motif


def test_motif_with_labels():
    motif = Motif(ScaleFamily.CROWN, (2, 0, 1))
    assert DataEncoder.encode_motif(motif, ["a", "b", "c"]) == {
        "family": "crown", "size": 3, "domain": [2, 0, 1], "labels": ["c", "a", "b"]}


def test_context_document_round_trips_through_deserialize(interordinal3):
    document = DataEncoder.encode_context(interordinal3)
    assert document["schema_version"] == SCHEMA_VERSION
    rebuilt = FormalContext.deserialize([document["objects"], document["attributes"], document["incidence"]])
    assert rebuilt == interordinal3


def test_normalized_scores_keep_the_fraction(boolean3):
    steps = greedy_cover(boolean3, enumerate_inventory(boolean3).pool(), None, HeuristicKind.NORMALIZED)
    document = DataEncoder.encode_covering(boolean3, steps, HeuristicKind.NORMALIZED)
    assert document["heuristic"] == "normalized"
    assert document["steps"][1]["score"] == {"numerator": 1, "denominator": 2, "value": 0.5}
    assert document["steps"][-1]["covered_extent_indices"] == list(range(8))
    json.dumps(document)


def test_standard_scores_stay_integers(boolean3):
    steps = greedy_cover(boolean3, enumerate_inventory(boolean3).pool(), 1)
    assert DataEncoder.encode_step(steps[0])["score"] == 8


def test_inventory_and_explanation_documents(crown3):
    inventory = enumerate_inventory(crown3)
    document = DataEncoder.encode_inventory(inventory)
    assert list(document["families"]) == [family.value for family in inventory.config.families]
    assert document["families"]["crown"]["total"] == 1
    doc = explain_covering(crown3, greedy_cover(crown3, inventory.pool(), 1))
    entries = DataEncoder.encode_explanation(doc)["entries"]
    assert entries[0]["families_rendered"] == ["contranominal", "crown"]


def test_scaling_dimension_document():
    document = DataEncoder.encode_scaling_dimension(None, [(ScaleFamily.ORDINAL, 2)], 3)
    assert document == {"schema_version": 1, "scales": ["ordinal:2"], "max_d": 3, "dimension": None}
