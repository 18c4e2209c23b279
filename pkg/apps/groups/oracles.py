"""
成员判定谓词与陪集的广度优先枚举
"""
from collections import deque
from typing import List, Optional, Tuple

from core.config import settings
from core.exceptions import CapExceededError
from core.logger import debug
from apps.psl2 import E, IDENTITY, V, ProjectiveMatrix
from apps.membership import contains

from .spec import GroupKind, GroupSpec


def _congruent_to_sign(A: ProjectiveMatrix, N: int) -> bool:
    """a ≡ d ≡ 1 或 a ≡ d ≡ −1 (mod N)"""
    return (A.a - 1) % N == 0 and (A.d - 1) % N == 0 or (A.a + 1) % N == 0 and (A.d + 1) % N == 0


def is_member(spec: GroupSpec, A: ProjectiveMatrix) -> bool:
    """
    A 是否属于 spec 描述的群

    同余条件对 A 与 −A 都检验，因为保存的只是符号规范的代表元。
    """
    N = spec.level
    if spec.kind is GroupKind.GAMMA0:
        return A.c % N == 0
    if spec.kind is GroupKind.GAMMA1:
        return A.c % N == 0 and _congruent_to_sign(A, N)
    if spec.kind is GroupKind.GAMMA:
        return A.b % N == 0 and A.c % N == 0 and _congruent_to_sign(A, N)
    if spec.kind is GroupKind.PERM:
        return spec.pair.fixes_base(A)
    return contains(spec.symbol, A).verdict


def default_cap(spec: GroupSpec) -> int:
    """同余子群族为 BFS_CAP_FACTOR·N³，其余为 BFS_CAP"""
    if spec.is_congruence_family:
        return max(settings.BFS_CAP_FACTOR * spec.level ** 3, 1)
    return settings.BFS_CAP


def index_by_bfs(spec: GroupSpec, cap: Optional[int] = None) -> Tuple[int, List[ProjectiveMatrix]]:
    """
    从单位元出发依次左乘 E、V 做广度优先搜索，枚举左陪集 αΓ

    α₁Γ = α₂Γ 当且仅当 α₂⁻¹α₁ ∈ Γ。

    Returns:
        (指数 μ, 陪集代表元)，第一个代表元是单位元

    Raises:
        CapExceededError: 代表元个数超过 cap
    """
    cap = cap if cap is not None else default_cap(spec)
    reps: List[ProjectiveMatrix] = [IDENTITY]
    inverses: List[ProjectiveMatrix] = [IDENTITY]
    queue = deque([IDENTITY])
    while queue:
        alpha = queue.popleft()
        for g in (E, V):
            beta = g * alpha
            if any(is_member(spec, inv * beta) for inv in inverses):
                continue
            if len(reps) >= cap:
                raise CapExceededError(
                    f"陪集个数超过上限 {cap}，指数过大或不是有限指数子群", data={"cap": cap}
                )
            reps.append(beta)
            inverses.append(beta.inverse())
            queue.append(beta)
    debug(f"{spec} 的 BFS 陪集枚举得到 μ = {len(reps)}")
    return len(reps), reps
