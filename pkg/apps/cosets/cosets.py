"""
左陪集代表元与陪集置换表示

每个顶点 x（含 ∞）与其右邻居 y 给出 ψ = (a_x −a_y; b_x −b_y)，ψ⁻¹ 把 x 送到 ∞、y 送到 0，
左邻居送到整数 w，即这一扇形里的 Farey 三角形个数。代表元取 L^{−j}ψ⁻¹（0 ≤ j < w），
顶点右侧的边为奇边时再加一块 j = −1。
"""
from dataclasses import dataclass
from typing import Dict, List, Tuple

from pydantic import BaseModel, Field
from sympy.combinatorics import Permutation

from core.exceptions import InternalError
from core.logger import debug, warning

from apps.psl2 import E, IDENTITY, L, V, ProjectiveMatrix, format_matrix
from apps.farey import FareySymbol, PairingKind, invariants
from apps.groups import SymbolGroup, index_by_bfs
from apps.membership import contains, coset_key
from apps.permutations import PermutationPair


@dataclass(frozen=True)
class CosetTable:
    """representatives[0] 为单位元；pair 描述 E、V 在这些陪集上的左乘作用"""
    representatives: Tuple[ProjectiveMatrix, ...]
    pair: PermutationPair


class CosetsExport(BaseModel):
    index: int = Field(..., description="指数 μ")
    representatives: List[str] = Field(..., description="陪集代表元，格式 a,b,c,d")


def _tile_reps(F: FareySymbol) -> List[ProjectiveMatrix]:
    seq = F.sequence
    last = len(seq) - 1
    reps: List[ProjectiveMatrix] = []
    for k in range(last):
        x, y = seq[k], seq[k + 1]
        z = seq[last - 1] if k == 0 else seq[k - 1]
        psi_inv = ProjectiveMatrix.of(x.p, -y.p, x.q, -y.q).inverse()
        w = psi_inv.act(z)
        if w.q != 1 or w.p < 0:
            raise InternalError(f"顶点 {x.cusp()} 的扇形宽度不是非负整数: {w}")
        start = -1 if F.pairings[k].kind is PairingKind.ODD else 0
        reps.extend(L ** -j * psi_inv for j in range(start, w.p))
    return reps


def _validated(F: FareySymbol, reps: List[ProjectiveMatrix], mu: int) -> bool:
    if len(reps) != mu:
        warning(f"陪集代表元个数 {len(reps)} 与指数 {mu} 不一致")
        return False
    keys = {coset_key(F, alpha) for alpha in reps}
    if len(keys) != mu:
        warning(f"陪集代表元中只有 {len(keys)} 个互不等价，应为 {mu}")
        return False
    return True


def coset_reps_from_symbol(F: FareySymbol) -> List[ProjectiveMatrix]:
    """
    μ 个两两不等价的左陪集代表元，第一个是单位元

    扇形公式的结果先校验个数与两两不等价，不通过时记录警告并改用 BFS 枚举。
    两两不等价用 coset_key 比较：coset_key(F, a) == coset_key(F, b)
    当且仅当 contains(F, b⁻¹a) 成立。
    """
    mu = invariants(F).index
    if mu == 1:
        return [IDENTITY]

    reps = _tile_reps(F)
    inside = [i for i, alpha in enumerate(reps) if contains(F, alpha).verdict]
    if len(inside) == 1:
        reps.pop(inside[0])
        reps.insert(0, IDENTITY)
        if _validated(F, reps, mu):
            return reps
    else:
        warning(f"扇形代表元中有 {len(inside)} 个落在群内，应恰好 1 个")

    warning(f"{F} 的扇形代表元校验失败，改用 BFS 枚举陪集")
    _, bfs_reps = index_by_bfs(SymbolGroup(F), cap=mu)
    return bfs_reps


def _action(F: FareySymbol, reps: List[ProjectiveMatrix], slots: Dict[Tuple, int], g: ProjectiveMatrix) -> Permutation:
    images: List[int] = []
    for i, alpha in enumerate(reps):
        j = slots.get(coset_key(F, g * alpha))
        if j is None:
            raise InternalError(f"{format_matrix(g)}·α{i + 1} 不落在任何已知陪集中")
        images.append(j)
    if len(set(images)) != len(images):
        raise InternalError(f"{format_matrix(g)} 在陪集上的作用不是置换")
    return Permutation(images)


def perm_rep(F: FareySymbol) -> CosetTable:
    """
    陪集置换表示：e(i) 是满足 Eα_iΓ = α_jΓ 的唯一 j，v 同理

    Raises:
        InternalError: 某个像不存在或不唯一
    """
    reps = coset_reps_from_symbol(F)
    if len(reps) == 1:
        identity = Permutation([0])
        return CosetTable((IDENTITY,), PermutationPair(identity, identity))

    slots = {coset_key(F, alpha): i for i, alpha in enumerate(reps)}
    if len(slots) != len(reps):
        raise InternalError("陪集代表元两两等价性校验不一致")
    pair = PermutationPair(_action(F, reps, slots, E), _action(F, reps, slots, V))
    debug(f"{F} 的陪集置换表示: μ = {pair.mu}")
    return CosetTable(tuple(reps), pair)


def export_cosets(reps: List[ProjectiveMatrix]) -> CosetsExport:
    return CosetsExport(index=len(reps), representatives=[format_matrix(alpha) for alpha in reps])
