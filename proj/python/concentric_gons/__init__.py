"""Regular polygons and the concentric circles through their vertices."""

from ._concentric import (
    CircleFamily,
    GeometryError,
    InfeasibleFamilyError,
    PlanePoint,
    RegularPolygon,
    Tolerance,
    angle_sweep,
    assess_feasibility,
    candidate_centers,
    circle_circle_intersection,
    cyclic_averages,
    distance_multiset,
    distance_identity_residual,
    heron_area,
    pair_polygons,
    phase_candidates,
    random_instance,
    reconstruct_polygons,
    recover_circumradii,
    shared_vertex_pairing,
    square_circle_radii,
    square_feasibility,
    triangle_circle_radii,
    triangle_feasibility,
    two_radius_power_sum,
    verify_reconstruction,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
