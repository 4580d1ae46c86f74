"""Lazy, cached computation pipeline for a single geometry.

A Bundle owns a geometry and computes its automorphism group, hyperplane
classification, valuations, valuation-class labels and valuation geometry
on demand, caching each stage. The built-in hexagons are cached at module
level so CLI commands and tests share one computation.
"""
from __future__ import annotations

from functools import cached_property
from typing import Dict, List, Optional, Tuple

from .constructions import build_h2, build_h2_dual, build_hexagon_2_1
from .geometry import Geometry, find_ovoids
from .hyperplanes import (Hyperplane, HyperplaneClass, _apply_perm_to_mask,
                          classify_hyperplanes, enumerate_hyperplanes)
from .perm import PermGroup, automorphism_group, orbit_of_function
from .valgeom import (ValuationGeometry, build_valuation_geometry,
                      line_type_table, restrict)
from .valuations import (Valuation, ValuationType, all_valuations,
                         classify_valuations, valuations_from_hyperplane)

BUILTIN_BUILDERS = {
    "h2": build_h2,
    "h2dual": build_h2_dual,
    "h21": build_hexagon_2_1,
}


class Bundle:
    """Cached derived data for one geometry."""

    def __init__(self, geometry: Geometry, name: str = ""):
        self.geometry = geometry
        self.name = name or geometry.name

    @cached_property
    def aut_group(self) -> PermGroup:
        return automorphism_group(self.geometry)

    @cached_property
    def aut_order(self) -> int:
        return self.aut_group.order()

    @cached_property
    def hyperplanes(self) -> List[Hyperplane]:
        return enumerate_hyperplanes(self.geometry)

    @cached_property
    def hyperplane_classes(self) -> List[HyperplaneClass]:
        return classify_hyperplanes(self.geometry, self.aut_group)

    @cached_property
    def hyperplane_class_of(self) -> Dict[int, int]:
        """Member bitmask -> index into hyperplane_classes."""
        mapping: Dict[int, int] = {}
        for idx, cls in enumerate(self.hyperplane_classes):
            queue = [cls.representative.member_bits]
            mapping[queue[0]] = idx
            while queue:
                m = queue.pop()
                for gen in self.aut_group.generators:
                    img = _apply_perm_to_mask(gen, m)
                    if img not in mapping:
                        mapping[img] = idx
                        queue.append(img)
        assert len(mapping) == len(self.hyperplanes)
        return mapping

    @cached_property
    def valuations(self) -> List[Valuation]:
        return all_valuations(self.geometry)

    @cached_property
    def classification(self) -> Tuple[List[ValuationType],
                                      Dict[Tuple[int, ...], str]]:
        return classify_valuations(self.geometry, self.aut_group,
                                   self.valuations)

    @property
    def valuation_types(self) -> List[ValuationType]:
        return self.classification[0]

    @property
    def type_labels(self) -> Dict[Tuple[int, ...], str]:
        return self.classification[1]

    @cached_property
    def valuation_geometry(self) -> ValuationGeometry:
        return build_valuation_geometry(self.geometry, self.valuations,
                                        self.type_labels)

    @cached_property
    def line_table(self) -> Dict[str, Dict[str, int]]:
        return line_type_table(self.valuation_geometry)

    @cached_property
    def ovoids(self) -> List[Tuple[int, ...]]:
        return find_ovoids(self.geometry)

    def vprime(self, point_types=("C",), line_types=("CCC",)):
        return restrict(self.valuation_geometry, point_types, line_types)

    # -- valuations per hyperplane class ---------------------------------

    @cached_property
    def valuations_per_class(self) -> List[int]:
        """Number of valuations carried by each hyperplane class.

        The count is an isomorphism invariant, so it is evaluated on the
        class representative only; consistency with the global valuation
        list is asserted by total count.
        """
        counts = [len(valuations_from_hyperplane(self.geometry,
                                                 cls.representative))
                  for cls in self.hyperplane_classes]
        total = sum(c * cls.orbit_size
                    for c, cls in zip(counts, self.hyperplane_classes))
        assert total == len(self.valuations)
        return counts

    def class_valuations_isomorphic(self, class_index: int) -> bool:
        """Whether all valuations on one representative hyperplane lie in
        a single automorphism orbit."""
        vals = valuations_from_hyperplane(
            self.geometry, self.hyperplane_classes[class_index].representative)
        if len(vals) <= 1:
            return True
        orbit = set(orbit_of_function(self.aut_group, vals[0].values))
        return all(v.values in orbit for v in vals)

    def valuation_class_labels_per_hyperplane_class(self) -> List[Optional[str]]:
        """For each hyperplane class, the valuation-type label of the
        valuations it carries (None if it carries none)."""
        labels: List[Optional[str]] = [None] * len(self.hyperplane_classes)
        for val in self.valuations:
            idx = self.hyperplane_class_of[val.hyperplane().member_bits]
            label = self.type_labels[val.values]
            if labels[idx] is None:
                labels[idx] = label
            else:
                assert labels[idx] == label
        return labels


_BUNDLES: Dict[str, Bundle] = {}


def get_bundle(name: str) -> Bundle:
    """Shared Bundle for a built-in geometry name (h2, h2dual, h21)."""
    if name not in BUILTIN_BUILDERS:
        raise KeyError(f"unknown geometry name {name!r}; "
                       f"choose from {sorted(BUILTIN_BUILDERS)}")
    if name not in _BUNDLES:
        _BUNDLES[name] = Bundle(BUILTIN_BUILDERS[name](), name)
    return _BUNDLES[name]
