# Copyright 2026 The hecke authors
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

"""Python bindings for the hecke C++ core."""

from hecke._hecke import (
    GrammarError,
    NotInOrbit,
    ResourceError,
    cf_eval,
    cf_expand,
    cutting_sequence,
    delta_counting,
    delta_transfer,
    enumerate_farey,
    est_count,
    gap_cdf,
    gauss_map,
    hull_radius,
    scaled_gaps,
    trace_geodesic,
)

__all__ = [
    "GrammarError",
    "NotInOrbit",
    "ResourceError",
    "cf_eval",
    "cf_expand",
    "cutting_sequence",
    "delta_counting",
    "delta_transfer",
    "enumerate_farey",
    "est_count",
    "gap_cdf",
    "gauss_map",
    "hull_radius",
    "scaled_gaps",
    "trace_geodesic",
]
