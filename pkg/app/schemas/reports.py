"""
Pydantic Schemas for verification reports and API responses
"""
from datetime import datetime
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field, computed_field, model_validator

CheckStatus = Literal["pass", "fail", "not_applicable"]


class VerificationReport(BaseModel):
    """Outcome of one executable check"""
    check: str = Field(..., min_length=1, description="Check name")
    source: Optional[str] = Field(None, description="Source the check ran on")
    parameters: Dict[str, Any] = Field(default_factory=dict, description="Ranges and budgets tested")
    status: CheckStatus = Field(..., description="pass, fail or not_applicable")
    witness: Optional[Dict[str, Any]] = Field(None, description="First counterexample, re-checkable")
    notes: List[str] = Field(default_factory=list, description="Human-readable remarks")
    observations: Dict[str, Any] = Field(default_factory=dict, description="Measured values and flags")

    @model_validator(mode="after")
    def validate_witness(self):
        if self.status == "fail" and not self.witness:
            raise ValueError("A failing report must carry a witness")
        return self

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    @property
    def exit_code(self) -> int:
        return {"pass": 0, "fail": 1, "not_applicable": 2}[self.status]


class ReportMetadata(BaseModel):
    project: str
    version: str
    config: Dict[str, Any] = Field(default_factory=dict, description="Run configuration")


class ConsolidatedReport(BaseModel):
    """All survey checks over all builtins, in job order"""
    metadata: ReportMetadata
    reports: List[VerificationReport]

    @computed_field
    @property
    def summary(self) -> Dict[str, int]:
        counts = {"pass": 0, "fail": 0, "not_applicable": 0}
        for report in self.reports:
            counts[report.status] += 1
        return counts


class SequenceInfo(BaseModel):
    name: str = Field(..., description="Registry name")
    description: str
    kind: str = Field(..., description="Generator kind")
    alphabet: List[str]


class PrefixResponse(BaseModel):
    name: str
    length: int = Field(..., ge=0)
    prefix: str = Field(..., description="Rendered prefix")


class ComponentStatus(BaseModel):
    """Individual component status"""
    status: Literal["healthy", "warning", "error"] = Field(..., description="Component status")
    message: Optional[str] = Field(None, description="Status message")
    details: Optional[Dict[str, Any]] = Field(None, description="Additional details")


class HealthResponse(BaseModel):
    """Health check response schema"""
    status: Literal["healthy", "degraded", "unhealthy"] = Field(..., description="Overall system status")
    version: str = Field(..., description="API version")
    environment: str = Field(..., description="Environment")
    timestamp: datetime = Field(default_factory=datetime.now, description="Check timestamp")
    components: Dict[str, ComponentStatus] = Field(default_factory=dict, description="Component statuses")
