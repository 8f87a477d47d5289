from typing import Iterable, Tuple

__all__ = ("signed_sum", "escape_identifier",)


def signed_sum(terms: Iterable[Tuple[str, int]]) -> str:
    """
    Join ``(label, coefficient)`` pairs into ``a + 2·b - c``, skipping zero coefficients.

    :param terms: Labels with their coefficients, in display order.
    :return: The rendered sum, or ``"0"`` when every coefficient vanishes.
    """
    text = ""
    for label, coefficient in terms:
        if not coefficient:
            continue
        magnitude = abs(coefficient)
        term = label if magnitude == 1 else f"{magnitude}·{label}"
        if not text:
            text = term if coefficient > 0 else f"-{term}"
        else:
            text += f" + {term}" if coefficient > 0 else f" - {term}"
    return text or "0"


def escape_identifier(name: str, reserved: str = ",") -> str:
    """
    Backslash-escape ``reserved`` characters and the backslash itself.

    Joining escaped names with an unescaped ``reserved`` character can be undone, so
    distinct name tuples never render the same.
    """
    for char in "\\" + reserved:
        name = name.replace(char, "\\" + char)
    return name
