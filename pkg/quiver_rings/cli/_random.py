import random
from typing import Dict, List, Set, Tuple

from ..core import Arrow, Quiver
from ..over_q import QuiverOverQ

__all__ = ("random_acyclic_quiver", "random_wrapping", "ARROW_NAMES",)

# single characters keep PIE object names short, as in E_{ab}
ARROW_NAMES = "abcdefghijklmnopqrstuvwxyz"


def random_acyclic_quiver(rng: random.Random, max_vertices: int, max_arrows: int,
                          min_vertices: int = 1) -> Quiver:
    """
    Draw an acyclic quiver whose arrows all go from a lower to a higher vertex index.

    The vertex count is uniform in ``[min_vertices, max_vertices]`` and the arrow count
    uniform in ``[0, max_arrows]``; parallel arrows are allowed.

    :param rng: The source of randomness.
    :param max_vertices: Largest vertex count.
    :param max_arrows: Largest arrow count, at most 26.
    :param min_vertices: Smallest vertex count.
    :return: A quiver on vertices ``"1"``, ``"2"``, ... and arrows ``"a"``, ``"b"``, ...
    """
    size = rng.randint(min_vertices, max_vertices)
    vertices = tuple(str(i + 1) for i in range(size))
    count = rng.randint(0, max_arrows) if size > 1 else 0
    arrows = []
    for name in ARROW_NAMES[:count]:
        low, high = sorted(rng.sample(range(size), 2))
        arrows.append(Arrow(name, vertices[low], vertices[high]))
    return Quiver(vertices, tuple(arrows))


def random_wrapping(rng: random.Random, base: Quiver, max_vertices: int) -> QuiverOverQ:
    """
    Draw a connected wrapping over ``base`` with at most ``max_vertices`` vertices.

    Vertices are added one at a time, each attached to an earlier one along a base
    arrow incident to its label; then extra arrows are added between existing vertices
    while no two parallel arrows share a label.

    :param rng: The source of randomness.
    :param base: A quiver with at least one vertex.
    :param max_vertices: Largest vertex count of the result.
    :return: A connected quiver over ``base`` whose structure map is a wrapping.
    """
    size = rng.randint(1, max_vertices)
    labels: List[str] = [rng.choice(base.vertices)]
    arrows: List[Arrow] = []
    arrow_label: Dict[str, str] = {}
    used: Set[Tuple[int, int, str]] = set()

    def add_arrow(source: int, target: int, label: str) -> None:
        name = f"e{len(arrows)}"
        arrows.append(Arrow(name, f"v{source}", f"v{target}"))
        arrow_label[name] = label
        used.add((source, target, label))

    while len(labels) < size:
        anchor = rng.randrange(len(labels))
        incident = (base.out_arrows[labels[anchor]] + base.in_arrows[labels[anchor]])
        if not incident:
            break
        arrow = rng.choice(incident)
        new = len(labels)
        if arrow.source == labels[anchor]:
            labels.append(arrow.target)
            add_arrow(anchor, new, arrow.name)
        else:
            labels.append(arrow.source)
            add_arrow(new, anchor, arrow.name)

    for _ in range(rng.randint(0, len(labels))):
        source, target = rng.randrange(len(labels)), rng.randrange(len(labels))
        choices = [a for a in base.arrows_between(labels[source], labels[target])
                   if (source, target, a.name) not in used]
        if choices:
            add_arrow(source, target, rng.choice(choices).name)

    vertices = tuple(f"v{i}" for i in range(len(labels)))
    return QuiverOverQ(Quiver(vertices, tuple(arrows)), base,
                       dict(zip(vertices, labels)), arrow_label)
