from __future__ import annotations

import os
from typing import Callable

import hypothesis
import pytest

from adecover.core.ade import AdeType
from adecover.cover.pipeline import PipelineResult, run_pipeline

hypothesis.settings.register_profile("default", max_examples=100, deadline=None)
hypothesis.settings.register_profile("ci", max_examples=1000, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def pipeline() -> Callable[[AdeType], PipelineResult]:
    """型ごとのパイプライン結果（セッション内でキャッシュ）"""
    cache: dict[AdeType, PipelineResult] = {}

    def get(t: AdeType) -> PipelineResult:
        if t not in cache:
            cache[t] = run_pipeline(t)
        return cache[t]

    return get
