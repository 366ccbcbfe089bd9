"""
Models module - Pydantic schema for one CLI run
"""

from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator

from ..config import BENCH_TRIALS, DEFAULT_SEED, DENSE_ENTRY_CAP
from ..core.operators import VectorMode
from ..core.setpart import FAMILIES
from ..services.algebra import ContextKind
from ..services.functors import FunctorName, GroupTag


class RunConfig(BaseModel):  # Flag yang sudah di-parse argparse, divalidasi sebelum engine jalan
    n: Optional[int] = Field(None, ge=1, description="Dimension of R^n")
    k: int = Field(0, ge=0, description="Number of bottom vertices")
    l: int = Field(0, ge=0, description="Number of top vertices")
    group: Optional[GroupTag] = Field(None, description="Group selector: sym, orth, symp, spec_orth")
    functor: Optional[FunctorName] = Field(None, description="Functor selector: theta, phi, x_sp, psi")
    context: Optional[ContextKind] = Field(None, description="Category context for compose / tensor")
    family: Optional[str] = Field(None, description="Diagram family for enumerate")
    mode: VectorMode = Field(VectorMode.EXACT, description="Vector arithmetic: exact rationals or float64")
    seed: int = Field(DEFAULT_SEED, ge=0, description="Seed for every random draw")
    dense_cap: int = Field(DENSE_ENTRY_CAP, ge=1, description="Max dense matrix entries")
    output_format: Literal["dense", "sparse"] = Field("dense", description="Matrix emission layout")
    trials: int = Field(BENCH_TRIALS, ge=1, description="Trials per bench row or per check suite")

    @model_validator(mode="after")
    def check_selectors(self) -> "RunConfig":
        if self.family is not None and self.family not in FAMILIES:
            raise ValueError(f"family must be one of {sorted(FAMILIES)}, got {self.family!r}")
        symplectic = self.group == GroupTag.SYMP or self.context == ContextKind.SYMPLECTIC
        if symplectic and (self.n is None or self.n < 2 or self.n % 2):
            raise ValueError(f"the symplectic selector needs an even n >= 2, got n={self.n}")
        if self.family in ("bg", "bounded") and self.n is None:
            raise ValueError(f"family {self.family} requires --n")
        return self

    def require_n(self) -> int:
        if self.n is None:
            raise ValueError("this command requires --n")
        return self.n


__all__ = ["RunConfig"]
