from .candidates import HIGHER_IS_BETTER


def rank(candidates):
    """Candidates best-first by effective score.

    Ties go to the earlier first occurrence, then to the lexicographically
    smaller phrase. All candidates must share one orientation.
    """
    candidates = list(candidates)
    if not candidates:
        return []
    orientations = {c.orientation for c in candidates}
    if len(orientations) > 1:
        raise ValueError(f"mixed score orientations: {sorted(orientations)}")
    sign = -1.0 if orientations.pop() == HIGHER_IS_BETTER else 1.0
    return sorted(candidates,
                  key=lambda c: (sign * c.effective_score, c.first_position, c.phrase, c.key))


def top_k(candidates, k=10):
    return [c.phrase for c in rank(candidates)[:max(k, 0)]]
