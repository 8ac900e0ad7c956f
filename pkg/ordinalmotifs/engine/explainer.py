from dataclasses import dataclass
from typing import List, Tuple

from ordinalmotifs.engine.exceptions import LabelResolutionError
from ordinalmotifs.engine.scale import ScaleFamily
from ordinalmotifs.engine.scale_recognizer import Motif, ScaleRecognizer

TEMPLATES = {
    ScaleFamily.NOMINAL:
        "The elements {names} are incomparable, i.e., all elements have at least one"
        " property that the other elements do not have.",
    ScaleFamily.ORDINAL:
        "There is a ranking of elements {names} such that an element has all the"
        " properties its successors has.",
    ScaleFamily.INTERORDINAL:
        "The elements {names} are ordered in such a way that each interval of elements"
        " has a unique set of properties they have in common.",
    ScaleFamily.CONTRANOMINAL:
        "Each combination of the elements {names} has a unique set of properties they"
        " have in common.",
    ScaleFamily.CROWN:
        "The elements {names} are incomparable. Furthermore, there is a closed cycle"
        " from {first} over {rest} back to {first} by pairwise shared properties.",
}


@dataclass(frozen=True)
class ExplanationEntry:
  text: str
  motif: Motif
  families_rendered: Tuple[ScaleFamily, ...]


@dataclass
class ExplanationDoc:
  entries: List[ExplanationEntry]

  def render_text(self):
    lines = []
    for number, entry in enumerate(self.entries, 1):
      prefix = "%d. " % number
      paragraphs = entry.text.split("\n")
      lines.append(prefix + paragraphs[0])
      lines.extend(" " * len(prefix) + paragraph for paragraph in paragraphs[1:])
    return "\n".join(lines)

  def __len__(self):
    return len(self.entries)


class Explainer:

  @classmethod
  def render_motif(self, motif, labels, clarification=None):
    names = [self.__resolve(g, labels, clarification) for g in motif.domain]
    if motif.family is ScaleFamily.CROWN:
      return TEMPLATES[motif.family].format(
          names=join_names(names), first=names[0], rest=join_names(names[1:]))
    return TEMPLATES[motif.family].format(names=join_names(names))

  @classmethod
  def explain_covering(self, context, steps, labels=None, clarification=None):
    labels = context.objects if labels is None else labels
    entries = []
    for step in steps:
      families = sorted(set(step.families) | {step.motif.family})
      paragraphs = []
      for family in families:
        motif = step.motif
        if family is not motif.family:
          motif = ScaleRecognizer.recognize(context, motif.domain_bits, family)
        paragraphs.append(self.render_motif(motif, labels, clarification))
      entries.append(ExplanationEntry("\n".join(paragraphs), step.motif, tuple(families)))
    return ExplanationDoc(entries)

  @classmethod
  def __resolve(self, g, labels, clarification):
    if clarification is not None:
      if not 0 <= g < len(clarification):
        raise LabelResolutionError("object %d has no clarified label group" % g)
      return clarification.label(g)
    try:
      return labels[g]
    except (IndexError, KeyError):
      raise LabelResolutionError("object %r has no label" % (g,)) from None


def join_names(names):
  """Join as "a", "a and b" or "a, b and c" (no serial comma)."""
  names = list(names)
  if len(names) <= 1:
    return "".join(names)
  return "%s and %s" % (", ".join(names[:-1]), names[-1])


render_motif = Explainer.render_motif
explain_covering = Explainer.explain_covering
