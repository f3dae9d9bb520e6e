# Copyright 2026 The biext Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

# Lint as: python3
""" Motive expressions of the `grprofile` command.

    expr   := term ("+" term)*
    term   := factor ("*" factor)*
    factor := atom ("/" k)?          quotient by W_-k
    atom   := NAME | "dual(" expr ")" | "(" expr ")"

`+` is the direct sum and `*` the tensor product.
"""
import re
from typing import Callable, List, Tuple

from ..exceptions import MotiveFileError
from ..hodge.mhs import MHS, direct_sum
from ..hodge.operations import quotient_by_weight, tensor_many
from ..motives.builders import cartier_dual


_TOKEN = re.compile(r"\s*(?:(\d+)|(dual)\s*\(|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def tokenize(text: str) -> List[Tuple[str, str]]:
    tokens = []
    for number, dual, name, symbol in _TOKEN.findall(text):
        if number:
            tokens.append(("int", number))
        elif dual:
            tokens.append(("dual", "dual("))
        elif name:
            tokens.append(("name", name))
        elif symbol.strip():
            if symbol not in "+*/()":
                raise MotiveFileError(f"Unexpected character {symbol!r} in expression {text!r}")
            tokens.append(("op", symbol))
    return tokens


class _Parser:
    def __init__(self, text: str, resolve: Callable[[str], MHS]):
        self.text = text
        self.tokens = tokenize(text)
        self.position = 0
        self.resolve = resolve

    def _peek(self) -> Tuple[str, str]:
        return self.tokens[self.position] if self.position < len(self.tokens) else ("end", "")

    def _take(self, kind: str, value: str = None) -> str:
        token_kind, token_value = self._peek()
        if token_kind != kind or (value is not None and token_value != value):
            expected = value or kind
            raise MotiveFileError(f"Expected {expected!r} at token {self.position} of {self.text!r}")
        self.position += 1
        return token_value

    def parse(self) -> MHS:
        if not self.tokens:
            raise MotiveFileError("Empty expression")
        result = self._expr()
        if self._peek()[0] != "end":
            raise MotiveFileError(f"Trailing input at token {self.position} of {self.text!r}")
        return result

    def _expr(self) -> MHS:
        parts = [self._term()]
        while self._peek() == ("op", "+"):
            self._take("op", "+")
            parts.append(self._term())
        return parts[0] if len(parts) == 1 else direct_sum(parts)

    def _term(self) -> MHS:
        factors = [self._factor()]
        while self._peek() == ("op", "*"):
            self._take("op", "*")
            factors.append(self._factor())
        return factors[0] if len(factors) == 1 else tensor_many(factors)

    def _factor(self) -> MHS:
        structure = self._atom()
        if self._peek() == ("op", "/"):
            self._take("op", "/")
            structure = quotient_by_weight(structure, int(self._take("int")))
        return structure

    def _atom(self) -> MHS:
        kind, value = self._peek()
        if kind == "name":
            self.position += 1
            return self.resolve(value)
        if kind == "dual":
            self.position += 1
            inner = self._expr()
            self._take("op", ")")
            return cartier_dual(inner)
        if (kind, value) == ("op", "("):
            self.position += 1
            inner = self._expr()
            self._take("op", ")")
            return inner
        raise MotiveFileError(f"Expected a motive at token {self.position} of {self.text!r}")


def evaluate_expression(text: str, resolve: Callable[[str], MHS]) -> MHS:
    """
    Evaluate a motive expression, looking names up with `resolve`.

    Raises:
        MotiveFileError: on a malformed expression.
        UnknownNameError: if `resolve` does not know a name.
        NotOneMotiveError: if `dual(...)` is applied to a structure that is not of 1-motive type.
    """
    return _Parser(text, resolve).parse()
