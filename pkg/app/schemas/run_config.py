"""
CLI run configuration
"""
from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator

from app.core.config import settings

Subcommand = Literal["generate", "complexity", "palindromes", "periods", "classp", "verify", "report"]
OutputFormat = Literal["plain", "csv", "json"]


class RunConfig(BaseModel):
    """One parsed invocation; identical configs give byte-identical output"""
    subcommand: Subcommand
    source: Optional[str] = Field(None, description="builtin name, parametric name or file:<path>")
    k_max: int = Field(..., ge=1)
    budget: int = Field(..., ge=2, description="Maximum prefix length examined")
    output_format: OutputFormat = "plain"
    out: Optional[Path] = Field(None, description="Write output here instead of stdout")
    instructions: Optional[str] = None
    cf: Optional[str] = None

    @model_validator(mode="after")
    def validate_budget(self):
        if self.budget < 2 * self.k_max:
            raise ValueError(f"budget ({self.budget}) must be at least 2 * k_max ({2 * self.k_max})")
        if self.budget > settings.GENERATOR_MAX_LENGTH:
            raise ValueError(
                f"budget ({self.budget}) exceeds GENERATOR_MAX_LENGTH ({settings.GENERATOR_MAX_LENGTH})"
            )
        return self
