# kfree/graph6.py
"""
Leitura e escrita do formato graph6 (um grafo por linha).

Layout:
- N(n): n ≤ 62 -> um byte chr(n + 63); 63 ≤ n ≤ 258047 -> '~' seguido de 3 bytes de 6 bits.
- Corpo: bits x(i, j) do triângulo superior em ordem de coluna
  ((0,1), (0,2), (1,2), (0,3), …), agrupados de 6 em 6 (big-endian),
  completados com zeros e somados a 63.

Observações:
- Só n ≤ 64 é aceito (limite da representação).
- A diretiva de cabeçalho ">>graph6<<" não é suportada.
- Bits de preenchimento não nulos são rejeitados: só registros canônicos passam.
"""

from __future__ import annotations

from kfree.config import DEFAULT_CONFIG
from kfree.errors import GraphFormatError
from kfree.graph import Graph

_MIN_CHAR = 63
_MAX_CHAR = 126


def pair_index(i: int, j: int) -> int:
    """Posição do bit do par {i, j} na ordem graph6 (também usada pelas máscaras do censo)."""
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def _payload_length(n: int) -> int:
    bits = n * (n - 1) // 2
    return (bits + 5) // 6


def _decode_size(text: str) -> tuple[int, int]:
    """Retorna (n, bytes consumidos)."""
    if not text:
        raise GraphFormatError("registro vazio", 0)
    first = ord(text[0])
    if first < _MIN_CHAR or first > _MAX_CHAR:
        raise GraphFormatError(f"caractere inválido {text[0]!r} no cabeçalho", 0)
    if first != _MAX_CHAR:
        return first - _MIN_CHAR, 1
    if len(text) > 1 and text[1] == "~":
        raise GraphFormatError("cabeçalho de 8 bytes (n > 258047) não suportado", 1)
    if len(text) < 4:
        raise GraphFormatError("cabeçalho de tamanho truncado", len(text))
    n = 0
    for offset in range(1, 4):
        c = ord(text[offset])
        if c < _MIN_CHAR or c > _MAX_CHAR:
            raise GraphFormatError(f"caractere inválido {text[offset]!r} no cabeçalho", offset)
        n = (n << 6) | (c - _MIN_CHAR)
    return n, 4


def parse_graph6(text: str) -> Graph:
    """Decodifica um registro graph6 (o '\\n' final é tolerado)."""
    record = text[:-1] if text.endswith("\n") else text
    n, pos = _decode_size(record)
    if not 1 <= n <= DEFAULT_CONFIG.MAX_VERTICES:
        raise GraphFormatError(f"n={n} fora do intervalo suportado [1, {DEFAULT_CONFIG.MAX_VERTICES}]", 0)

    need = _payload_length(n)
    body = record[pos:]
    if len(body) < need:
        raise GraphFormatError(f"corpo truncado: esperados {need} bytes, recebidos {len(body)}", len(record))
    if len(body) > need:
        raise GraphFormatError("conteúdo excedente após o corpo", pos + need)

    bits = 0
    for k, ch in enumerate(body):
        c = ord(ch)
        if c < _MIN_CHAR or c > _MAX_CHAR:
            raise GraphFormatError(f"caractere inválido {ch!r} no corpo", pos + k)
        bits = (bits << 6) | (c - _MIN_CHAR)

    total = n * (n - 1) // 2
    padding = need * 6 - total
    if padding and bits & ((1 << padding) - 1):
        raise GraphFormatError("bits de preenchimento não nulos", pos + need - 1)
    bits >>= padding

    rows = [0] * n
    k = total - 1  # o primeiro bit do corpo é o mais significativo
    for j in range(1, n):
        for i in range(j):
            if bits >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k -= 1
    return Graph(n, tuple(rows))


def emit_graph6(g: Graph) -> str:
    """Codifica g em graph6 canônico (sem '\\n')."""
    n = g.n
    if n <= 62:
        header = chr(n + _MIN_CHAR)
    else:
        header = "~" + "".join(chr(((n >> shift) & 63) + _MIN_CHAR) for shift in (12, 6, 0))

    out = []
    acc = 0
    width = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            width += 1
            if width == 6:
                out.append(chr(acc + _MIN_CHAR))
                acc = 0
                width = 0
    if width:
        out.append(chr((acc << (6 - width)) + _MIN_CHAR))
    return header + "".join(out)
