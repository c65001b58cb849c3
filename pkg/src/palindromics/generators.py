"""Constructions of the infinite words the library ships with.

Four generic mechanisms (periodic powers, morphic fixed points, morphic
images, reversal-closure recursions) plus the Fibonacci concatenation
recurrence, a registry of named presets, and a one-line textual spec form.
"""

from __future__ import annotations

from .streams import PrefixStream, ShiftedStream, shift
from .words import Alphabet, Morphism, Word


class UnknownGeneratorError(ValueError):
    """Raised when a generator reference resolves to nothing."""


class PeriodicStream(PrefixStream):
    """u repeated forever."""

    def __init__(self, u: Word | str) -> None:
        u = u if isinstance(u, Word) else Word(u)
        if len(u) == 0:
            raise ValueError("periodic block must be non-empty")
        super().__init__(u.alphabet)
        self.block = u

    def _grow(self, n: int) -> None:
        reps = n // len(self.block) + 1
        self._text = self.block.text * reps

    def describe(self) -> str:
        return f"pow({self.block.text})"


class FixedPointStream(PrefixStream):
    """The unique fixed point of a morphism prolongable at a seed letter.

    Materializes by self-reading: the buffer starts as image(seed) and each
    step appends the image of the next unexpanded buffer letter, so the cost
    of prefix(n) is linear in n.
    """

    def __init__(self, morphism: Morphism, seed: str) -> None:
        if not morphism.is_prolongable(seed):
            raise ValueError(
                f"morphism {morphism.describe()} is not prolongable at {seed!r}"
            )
        super().__init__(morphism.target)
        self.morphism = morphism
        self.seed = seed
        self._letters: list[str] = list(morphism.image(seed).text)
        self._next = 1

    def _grow(self, n: int) -> None:
        letters, images = self._letters, self.morphism.images
        while len(letters) < n:
            letters.extend(images[letters[self._next]].text)
            self._next += 1
        self._text = "".join(letters)

    def describe(self) -> str:
        return f"fix({self.morphism.describe()}, {self.seed})"


class ImageStream(PrefixStream):
    """Letterwise image of another stream under a morphism."""

    def __init__(self, morphism: Morphism, inner: PrefixStream) -> None:
        if set(inner.alphabet.symbols) - set(morphism.source.symbols):
            raise ValueError(
                f"morphism source {morphism.source.symbols!r} does not cover "
                f"stream alphabet {inner.alphabet.symbols!r}"
            )
        super().__init__(morphism.target)
        self.morphism = morphism
        self.inner = inner
        self._consumed = 0

    def _grow(self, n: int) -> None:
        images = self.morphism.images
        parts = [self._text]
        total = len(self._text)
        while total < n:
            # Every image is non-empty, so n fresh inner letters suffice.
            take = max(64, n - total)
            chunk = self.inner.prefix_text(self._consumed + take)[self._consumed :]
            self._consumed += len(chunk)
            for ch in chunk:
                img = images[ch].text
                parts.append(img)
                total += len(img)
        self._text = "".join(parts)

    def describe(self) -> str:
        return f"image({self.morphism.describe()}, {self.inner.describe()})"


TRANSFORMS = ("rev", "revcomp", "id")


class ReversalClosureStream(PrefixStream):
    """Limit of the recursion U(k+1) = U(k) . insert(k) . t(U(k)).

    Inserts cycle through a fixed schedule; t is plain reversal, reversal
    followed by the alphabet-order exchange of letters (a<->b on two
    letters), or the identity. With t = rev, every term is closed under
    reversal by construction. Each term is a prefix of the next, so the
    limit is well defined.
    """

    def __init__(
        self, u0: Word | str, inserts: list[Word | str], transform: str = "rev"
    ) -> None:
        u0 = u0 if isinstance(u0, Word) else Word(u0)
        if len(u0) == 0:
            raise ValueError("the initial term must be non-empty")
        if not inserts:
            raise ValueError("insert schedule must have at least one entry")
        if transform not in TRANSFORMS:
            raise ValueError(f"transform must be one of {TRANSFORMS}, got {transform!r}")
        insert_texts = [w.text if isinstance(w, Word) else str(w) for w in inserts]
        # The alphabet covers the seed and every connector.
        alphabet = Word(u0.text + "".join(insert_texts)).alphabet
        if len(u0.alphabet) > len(alphabet):
            alphabet = u0.alphabet
        super().__init__(alphabet)
        self.inserts = insert_texts
        self.transform = transform
        syms = alphabet.symbols
        self._exchange = str.maketrans(syms, syms[::-1])
        self._terms = [u0.text]

    def _apply_transform(self, s: str) -> str:
        if self.transform == "rev":
            return s[::-1]
        if self.transform == "revcomp":
            return s[::-1].translate(self._exchange)
        return s

    def term(self, k: int) -> Word:
        """The k-th term of the recursion (term(0) is the initial word)."""
        while len(self._terms) <= k:
            i = len(self._terms) - 1
            u = self._terms[-1]
            self._terms.append(u + self.inserts[i % len(self.inserts)] + self._apply_transform(u))
        return Word(self._terms[k], self.alphabet)

    def _grow(self, n: int) -> None:
        k = len(self._terms) - 1
        while len(self._terms[-1]) < n:
            k += 1
            self.term(k)
        self._text = self._terms[-1]

    def describe(self) -> str:
        ins = ",".join(self.inserts)
        return f"revclose(U0={self._terms[0]}, inserts=[{ins}], t={self.transform})"


class FibonacciStream(PrefixStream):
    """The Fibonacci word as the limit of f(1)=a, f(2)=ab, f(n+1)=f(n)f(n-1).

    The recurrence seeds are f(0)=b, f(1)=a; every term from f(1) on is a
    prefix of the next.
    """

    def __init__(self) -> None:
        super().__init__(Alphabet("ab"))
        self._terms = ["a", "ab"]

    def _grow(self, n: int) -> None:
        terms = self._terms
        while len(terms[-1]) < n:
            terms.append(terms[-1] + terms[-2])
        self._text = terms[-1]

    def describe(self) -> str:
        return "fibonacci"


def periodic(u: Word | str) -> PrefixStream:
    return PeriodicStream(u)


def fixed_point(m: Morphism, seed: str) -> PrefixStream:
    return FixedPointStream(m, seed)


def image(m: Morphism, s: PrefixStream) -> PrefixStream:
    return ImageStream(m, s)


def reversal_closure(
    u0: Word | str, inserts: list[Word | str], transform: str = "rev"
) -> PrefixStream:
    return ReversalClosureStream(u0, inserts, transform)


def fibonacci() -> PrefixStream:
    return FibonacciStream()


def paperfolding() -> PrefixStream:
    """Limit of P(0)=a, P(n+1) = P(n) . a . hat(P(n)), where hat reverses and
    exchanges a with b. The n-th term has length 2**(n+1) - 1.
    """
    return ReversalClosureStream(Word("a", Alphabet("ab")), ["a"], "revcomp")


# Named morphisms usable in generator spec strings.
MORPHISMS: dict[str, str] = {
    "bc": "a->a,b->bc",
    "abbab": "a->a,b->abbab",
    "pairswap": "a->ab,b->ba",
}


def named_morphism(name: str) -> Morphism:
    try:
        return Morphism.parse(MORPHISMS[name])
    except KeyError:
        raise UnknownGeneratorError(
            f"unknown morphism {name!r}; named morphisms: {', '.join(sorted(MORPHISMS))}"
        ) from None


def _preset_factories():
    return {
        "fibonacci": (
            "binary Fibonacci word from the concatenation recurrence",
            fibonacci,
        ),
        "fib": ("alias of fibonacci", fibonacci),
        "fib-bc": (
            "image of the Fibonacci word under b->bc; five palindromes",
            lambda: ImageStream(named_morphism("bc"), fibonacci()),
        ),
        "fib-abbab": (
            "image of the Fibonacci word under b->abbab; eleven palindromes",
            lambda: ImageStream(named_morphism("abbab"), fibonacci()),
        ),
        "paperfolding": (
            "regular paperfolding word (reverse-and-exchange recursion)",
            paperfolding,
        ),
        "fold": ("alias of paperfolding", paperfolding),
        "fold-pairswap": (
            "image of the paperfolding word under a->ab, b->ba; seventeen palindromes",
            lambda: ImageStream(named_morphism("pairswap"), paperfolding()),
        ),
        "quadfold": (
            "four-letter reversal-closure word (U0=ab, insert cd); five palindromes",
            lambda: ReversalClosureStream(Word("ab", Alphabet("abcd")), ["cd"], "rev"),
        ),
        "maxpal5": (
            "binary reversal-closure word (U0=aabb, inserts ab/ba) whose longest palindrome has length 5",
            lambda: ReversalClosureStream(Word("aabb"), ["ab", "ba"], "rev"),
        ),
        "closed13": (
            "binary reversal-closure word (U0=abaabbabaaabbaaba, inserts bbaa/aabb) with thirteen palindromes",
            lambda: ReversalClosureStream(
                Word("abaabbabaaabbaaba"), ["bbaa", "aabb"], "rev"
            ),
        ),
    }


PRESETS = _preset_factories()


def preset_names() -> list[str]:
    return sorted(PRESETS) + ["pow:<word>"]


def _split_args(body: str) -> list[str]:
    """Split on top-level commas, respecting () and [] nesting."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(body):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(body[start:i].strip())
            start = i + 1
    parts.append(body[start:].strip())
    return [p for p in parts if p]


def _parse_call(text: str) -> tuple[str, list[str]] | None:
    text = text.strip()
    if not text.endswith(")"):
        return None
    head, sep, rest = text.partition("(")
    if not sep:
        return None
    return head.strip(), _split_args(rest[:-1])


def _morphism_from_token(token: str) -> Morphism:
    if "->" in token:
        return Morphism.parse(token)
    return named_morphism(token.strip())


def parse_generator_spec(text: str) -> PrefixStream:
    """Parse the one-line spec form.

    Forms: pow(WORD) | fix(RULES, SEED) | image(MORPHISM, INNER)
    | revclose(U0=WORD, inserts=[W1,W2,...], t=rev|revcomp|id)
    | shift(INNER, K) | any preset name. MORPHISM is a named morphism or
    inline rules 'a->ab,b->a'; INNER is itself a spec or preset name.
    """
    call = _parse_call(text)
    if call is None:
        return resolve_generator(text)
    head, args = call
    if head == "pow":
        if len(args) != 1:
            raise UnknownGeneratorError("pow takes exactly one word argument")
        return PeriodicStream(Word(args[0]))
    if head == "fix":
        if len(args) < 2:
            raise UnknownGeneratorError("fix takes morphism rules and a seed")
        seed = args[-1]
        return FixedPointStream(_morphism_from_token(",".join(args[:-1])), seed)
    if head == "image":
        if len(args) < 2:
            raise UnknownGeneratorError("image takes a morphism and an inner generator")
        inner = resolve_generator(args[-1])
        return ImageStream(_morphism_from_token(",".join(args[:-1])), inner)
    if head == "shift":
        if len(args) != 2:
            raise UnknownGeneratorError("shift takes an inner generator and an offset")
        return shift(resolve_generator(args[0]), int(args[1]))
    if head == "revclose":
        kwargs: dict[str, str] = {}
        for arg in args:
            key, sep, value = arg.partition("=")
            if not sep:
                raise UnknownGeneratorError(f"revclose expects key=value, got {arg!r}")
            kwargs[key.strip()] = value.strip()
        missing = {"U0", "inserts"} - set(kwargs)
        if missing:
            raise UnknownGeneratorError(f"revclose missing {sorted(missing)}")
        inserts_body = kwargs["inserts"]
        if not (inserts_body.startswith("[") and inserts_body.endswith("]")):
            raise UnknownGeneratorError("revclose inserts must look like [w1,w2]")
        inserts = [w.strip() for w in inserts_body[1:-1].split(",") if w.strip()]
        return ReversalClosureStream(
            Word(kwargs["U0"]), inserts, kwargs.get("t", "rev")
        )
    raise UnknownGeneratorError(
        f"unknown generator form {head!r}; forms: pow, fix, image, shift, revclose"
    )


def resolve_generator(ref: str) -> PrefixStream:
    """Resolve a preset name, pow:<word> shorthand, or spec string."""
    ref = ref.strip()
    if ref in PRESETS:
        return PRESETS[ref][1]()
    if ref.startswith("pow:"):
        return PeriodicStream(Word(ref[4:]))
    if "(" in ref:
        return parse_generator_spec(ref)
    raise UnknownGeneratorError(f"unknown generator {ref!r}")
