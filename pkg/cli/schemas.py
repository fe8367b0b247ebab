"""
命令行输入文件的数据模型

复数写作 [re, im]；纯态 {"dim", "amplitudes"}；密度矩阵 {"dim", "rows"}；
混合制备 {"beta", "terms": [{"alpha", "state"}]}，或以实数 "weight" 代替整数 "alpha"。
"""

from typing import Annotated, Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from quantum.codec import decode_matrix, density_from_dict, pure_state_from_dict
from quantum.states import DensityMatrix, MixedPreparation, Povm, PureState

ComplexPair = Annotated[List[float], Field(min_length=2, max_length=2)]


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid")


class PureStateModel(_Strict):
    """纯态"""
    dim: int = Field(..., ge=2, description="Hilbert 空间维数")
    amplitudes: List[ComplexPair] = Field(..., description="振幅列表")

    @model_validator(mode="after")
    def _check_dim(self) -> "PureStateModel":
        if len(self.amplitudes) != self.dim:
            raise ValueError(f"声明维数 {self.dim} 与振幅个数 {len(self.amplitudes)} 不一致")
        return self

    def to_state(self) -> PureState:
        return pure_state_from_dict(self.model_dump())


class DensityModel(_Strict):
    """密度矩阵"""
    dim: int = Field(..., ge=2, description="Hilbert 空间维数")
    rows: List[List[ComplexPair]] = Field(..., description="矩阵行")

    @model_validator(mode="after")
    def _check_shape(self) -> "DensityModel":
        if len(self.rows) != self.dim or any(len(r) != self.dim for r in self.rows):
            raise ValueError(f"矩阵必须是 {self.dim}×{self.dim}")
        return self

    def to_density(self) -> DensityMatrix:
        return density_from_dict(self.model_dump())


StateModel = Union[PureStateModel, DensityModel]


def _convert(model: StateModel) -> Union[PureState, DensityMatrix]:
    return model.to_state() if isinstance(model, PureStateModel) else model.to_density()


class TermModel(_Strict):
    alpha: Optional[int] = Field(None, ge=0, description="整数权重")
    weight: Optional[float] = Field(None, ge=0.0, description="实数权重")
    state: PureStateModel

    @model_validator(mode="after")
    def _one_weight(self) -> "TermModel":
        if (self.alpha is None) == (self.weight is None):
            raise ValueError("每一项必须且只能给出 alpha 或 weight 之一")
        return self


class PreparationModel(_Strict):
    """混合制备的一个分解"""
    beta: Optional[int] = Field(None, ge=1, description="整数归一化常数")
    terms: List[TermModel] = Field(..., min_length=1)

    @model_validator(mode="after")
    def _consistent(self) -> "PreparationModel":
        integral = [t.alpha is not None for t in self.terms]
        if any(integral) and not all(integral):
            raise ValueError("同一制备中不能混用 alpha 与 weight")
        if all(integral) and self.beta is None:
            raise ValueError("整数权重需要 beta")
        return self

    def to_preparation(self) -> MixedPreparation:
        pures = tuple(t.state.to_state() for t in self.terms)
        if self.terms[0].alpha is not None:
            return MixedPreparation(pures, tuple(t.alpha for t in self.terms), self.beta)
        return MixedPreparation.from_weights(pures, [t.weight for t in self.terms])


class StatesFile(_Strict):
    """antidist 命令的输入"""
    states: List[StateModel] = Field(..., min_length=2)

    def to_states(self) -> List[Union[PureState, DensityMatrix]]:
        return [_convert(s) for s in self.states]


class PreparationsFile(_Strict):
    """classify 与 ks-overlap 命令的输入；dim、count 为 mub 命令写出的元数据"""
    dim: Optional[int] = Field(None, ge=2)
    count: Optional[int] = Field(None, ge=1)
    preparations: List[PreparationModel] = Field(..., min_length=1)

    @model_validator(mode="after")
    def _metadata(self) -> "PreparationsFile":
        if self.count is not None and self.count != len(self.preparations):
            raise ValueError(f"count = {self.count} 与制备个数 {len(self.preparations)} 不一致")
        if self.dim is not None:
            dims = {t.state.dim for p in self.preparations for t in p.terms}
            if dims != {self.dim}:
                raise ValueError(f"dim = {self.dim} 与态维数 {sorted(dims)} 不一致")
        return self

    def to_preparations(self) -> List[MixedPreparation]:
        return [p.to_preparation() for p in self.preparations]


class QubitTripleFile(_Strict):
    """geometry 命令的输入"""
    states: List[PureStateModel] = Field(..., min_length=3, max_length=3)

    def to_states(self) -> List[PureState]:
        return [s.to_state() for s in self.states]


class MeasurementModel(_Strict):
    effects: List[List[List[ComplexPair]]] = Field(..., min_length=2, max_length=2)

    def to_povm(self) -> Povm:
        return Povm(tuple(decode_matrix(e) for e in self.effects))


class SWitnessFile(_Strict):
    """s-witness 命令的输入，态以 "00"、"01"、"10"、"11" 标记"""
    states: Dict[str, StateModel]
    measurements: List[MeasurementModel] = Field(..., min_length=2, max_length=2)

    @model_validator(mode="after")
    def _labels(self) -> "SWitnessFile":
        if sorted(self.states) != ["00", "01", "10", "11"]:
            raise ValueError(f"态标签必须是 00、01、10、11，实际 {sorted(self.states)}")
        return self

    def to_states(self) -> Dict[str, DensityMatrix]:
        out = {}
        for label, model in self.states.items():
            value = _convert(model)
            out[label] = value.density() if isinstance(value, PureState) else value
        return out

    def to_measurements(self) -> List[Povm]:
        return [m.to_povm() for m in self.measurements]
