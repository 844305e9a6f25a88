from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from sentislope import synth
from sentislope.lexicon import bundled_lexicon_path
from sentislope.smoother import _loesspy
from sentislope.smoother import core as smoother_core

try:
    from sentislope.smoother import _loessc

    KERNELS = [("python", _loesspy), ("cython", _loessc)]
except ImportError:
    KERNELS = [("python", _loesspy)]

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(params=KERNELS, ids=[name for name, _ in KERNELS])
def kernel_backend(request, monkeypatch):
    """Run the test under each available smoother kernel."""
    name, module = request.param
    monkeypatch.setattr(smoother_core, "_KERNEL", module)
    return name


@pytest.fixture(scope="session")
def demo_corpus_path(tmp_path_factory) -> Path:
    path = tmp_path_factory.mktemp("demo") / "corpus.jsonl"
    path.write_text(synth.corpus_jsonl(), encoding="utf-8")
    return path


@pytest.fixture(scope="session")
def lexicon_paths() -> dict[str, Path]:
    return {
        "nrc": bundled_lexicon_path("nrc"),
        "bing_pos": bundled_lexicon_path("bing_positive"),
        "bing_neg": bundled_lexicon_path("bing_negative"),
    }


@pytest.fixture()
def mini_corpus_path() -> Path:
    return DATA_DIR / "mini_corpus.jsonl"
