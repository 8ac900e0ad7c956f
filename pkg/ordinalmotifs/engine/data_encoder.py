from fractions import Fraction

from ordinalmotifs.engine.motif_covering import MotifCovering
from ordinalmotifs.utils.bitset_utils import to_indices

SCHEMA_VERSION = 1


class DataEncoder:

  @classmethod
  def encode_motif(self, motif, labels=None):
    hash_ = {
        "family": motif.family.value,
        "size": motif.size,
        "domain": list(motif.domain),
        }
    if labels is not None:
      hash_["labels"] = [labels[g] for g in motif.domain]
    return hash_

  @classmethod
  def encode_context(self, context):
    objects, attributes, rows = context.serialize()
    return self.__document({"objects": objects, "attributes": attributes, "incidence": rows})

  @classmethod
  def encode_context_summary(self, context, list_extents=False):
    hsh = {
        "objects": len(context.objects),
        "attributes": len(context.attributes),
        "extents": len(context.extents()),
    }
    if list_extents:
      hsh["extent_list"] = [context.object_labels(extent) for extent in context.extents()]
    return self.__document(hsh)

  @classmethod
  def encode_inventory(self, inventory, labels=None):
    stats = inventory.stats
    families = {}
    for family in inventory.config.families:
      total, maximal, largest = stats[family]
      listed = inventory.maximal if inventory.config.maximal_only else inventory.motifs
      families[family.value] = {
          "total": total,
          "maximal": maximal,
          "largest": largest,
          "motifs": [self.encode_motif(motif, labels) for motif in listed.get(family, [])],
      }
    return self.__document({
        "maximal_only": inventory.config.maximal_only,
        "crown_size_cap": inventory.config.crown_size_cap,
        "families": families,
    })

  @classmethod
  def encode_covering(self, context, steps, heuristic, labels=None):
    ratios = MotifCovering.family_ratios(steps)
    return self.__document({
        "heuristic": heuristic.value,
        "total_extents": len(context.extents()),
        "covered": steps[-1].cumulative if steps else 0,
        "steps": [self.encode_step(step, labels) for step in steps],
        "family_ratios": {family.value: float(ratio) for family, ratio in ratios.items()},
    })

  @classmethod
  def encode_step(self, step, labels=None):
    return {
        "step": step.step,
        "motif": self.encode_motif(step.motif, labels),
        "new_extents": step.new_extents,
        "cumulative": step.cumulative,
        "score": self.__score(step.score),
        "families": [family.value for family in step.families],
        "covered_extent_indices": to_indices(step.covered),
    }

  @classmethod
  def encode_explanation(self, doc, labels=None):
    return self.__document({
        "entries": [
          {
            "text": entry.text,
            "motif": self.encode_motif(entry.motif, labels),
            "families_rendered": [family.value for family in entry.families_rendered],
          } for entry in doc.entries]
    })

  @classmethod
  def encode_scaling_dimension(self, dimension, scale_specs, max_d):
    return self.__document({
        "scales": ["%s:%d" % (family.value, n) for family, n in scale_specs],
        "max_d": max_d,
        "dimension": dimension,
    })

  @classmethod
  def __score(self, score):
    if isinstance(score, Fraction):
      return {"numerator": score.numerator, "denominator": score.denominator, "value": float(score)}
    return score

  @classmethod
  def __document(self, body):
    document = {"schema_version": SCHEMA_VERSION}
    document.update(body)
    return document
