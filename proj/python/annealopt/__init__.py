# Copyright 2026 The annealopt Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Simulated annealing over Hit-and-Run for approximately convex functions.

The compiled extension carries the implementation; this package re-exports
its public surface.
"""

from annealopt._annealopt import (
    AnnealoptError,
    Chord,
    ConvexBody,
    DecayModel,
    __version__,
    anneal,
    certify_beta_log_concave,
    critical_radius,
    find_chord,
    gibbs_gap_bound,
    gibbs_mean_gap,
    grid_snap,
    make_plan_summary,
    mixing_steps,
    next_radius,
    quadrature_density_1d,
    sample_chord,
    sampler_precision,
    staged_optimize,
    stochastic_params,
    walk,
    warm_start_norm,
)

__all__ = [
    "AnnealoptError",
    "Chord",
    "ConvexBody",
    "DecayModel",
    "__version__",
    "anneal",
    "certify_beta_log_concave",
    "critical_radius",
    "find_chord",
    "gibbs_gap_bound",
    "gibbs_mean_gap",
    "grid_snap",
    "make_plan_summary",
    "mixing_steps",
    "next_radius",
    "quadrature_density_1d",
    "sample_chord",
    "sampler_precision",
    "staged_optimize",
    "stochastic_params",
    "walk",
    "warm_start_norm",
]
