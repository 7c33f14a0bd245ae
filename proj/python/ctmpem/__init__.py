# Copyright 2026 The ctmpem Authors
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

"""CTMP readout-error simulation, calibration and mitigation.

Bitstrings put qubit 0 rightmost. Models, calibration sets and graphs use the
same JSON layouts as the ctmpem command-line tool.
"""

import csv
import io
import json
import os

from ctmpem import _core
from ctmpem._core import (
    Error,
    Model,
    apply_readout_noise,
    calibration_labels,
    exact_ground_energy,
    hubbard_terms,
    max_threads,
    minimal_calibration_labels,
    mitigate_expectation,
    set_max_threads,
)

__version__ = _core.__version__

__all__ = [
    "Error",
    "Model",
    "apply_readout_noise",
    "calibration_labels",
    "characterize",
    "exact_ground_energy",
    "fit_ctmp",
    "hubbard_terms",
    "load_model",
    "max_threads",
    "minimal_calibration_labels",
    "mitigate_expectation",
    "model_from_dict",
    "model_to_dict",
    "run_sampling",
    "run_sweep",
    "set_max_threads",
    "simulate_calibration",
]


def _rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def model_from_dict(data):
    return Model.from_json(json.dumps(data))


def model_to_dict(model):
    return json.loads(model.to_json())


def load_model(path):
    with open(path, encoding="utf-8") as f:
        return Model.from_json(f.read())


def simulate_calibration(model, shots, seed, labels=None):
    """Returns a calibration dict sampled through the model's noise."""
    return json.loads(_core.simulate_calibration(model, labels, shots, seed))


def fit_ctmp(calibration, subtract_cross_pair=True):
    """Fits a model to a calibration dict; returns (model, per-pair diagnostics)."""
    return _core.fit_ctmp(json.dumps(calibration), subtract_cross_pair)


def run_sweep(config, base_dir="."):
    """Runs a sweep config dict; returns (rows, minimum value)."""
    text, minimum = _core.run_sweep(json.dumps(config), os.fspath(base_dir))
    return _rows(text), minimum


def run_sampling(config, base_dir="."):
    """Runs a sampling config dict; returns (rows, per-size summaries)."""
    rows, summary = _core.run_sampling(json.dumps(config), os.fspath(base_dir))
    return _rows(rows), _rows(summary)


def characterize(model, graph):
    """Groups model rates by graph distance; returns (records, summary)."""
    records, summary = _core.characterize(model, json.dumps(graph))
    return _rows(records), _rows(summary)
