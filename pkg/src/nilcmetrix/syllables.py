"""Rule-based syllable counting for Brazilian Portuguese orthography.

The counter scans vowel groups and decides, pair by pair, whether two
adjacent vowel letters share a nucleus (diphthong) or split (hiatus).
The rule set is frozen so counts stay reproducible:

* strong vowels: a e o (and their accented/nasal forms); weak: i u.
* strong + unaccented weak  -> falling diphthong (one nucleus): ai, eu, ou...
* nasal 'ã'/'õ' absorb a following e/o/i: ão, ãe, õe count one nucleus.
* weak + weak -> diphthong: fui, viu.
* weak + strong -> hiatus (di-a, cri-an-ça), except after q/g where the
  'u' is a silent/semivowel onset: qua-se, á-gua, que, gui-a.
* accented í/ú never join the previous vowel: sa-í-da, ba-ú.
* i directly followed by 'nh' keeps its own nucleus: ra-i-nha.

Stress that is not marked orthographically (ca-ir, sa-ir) is out of reach
of a purely orthographic rule set; such words count one syllable short.
"""
from __future__ import annotations

import unicodedata

_VOWELS = set("aeiouáéíóúâêôàãõü")
_STRONG = set("aeoáéóâêôàãõ")
_WEAK_UNACCENTED = set("iu")
_ACCENTED_WEAK = set("íú")
_NASAL = set("ãõ")


class SyllableError(ValueError):
    """Raised for input the syllabifier does not accept."""


def _is_vowel(ch: str) -> bool:
    return ch in _VOWELS


def syllable_count(word: str) -> int:
    """Number of syllables in one Portuguese word. Deterministic, >= 1.

    Raises SyllableError for empty or non-alphabetic input (hyphens and
    internal apostrophes are not accepted; split compounds first).
    """
    if not word:
        raise SyllableError("cannot syllabify an empty string")
    norm = unicodedata.normalize("NFC", word).lower()
    if not norm.isalpha():
        raise SyllableError(f"cannot syllabify non-alphabetic input: {word!r}")
    # y is rare in BP (loanwords); treat it as the vowel i.
    norm = norm.replace("y", "i")

    nuclei = 0
    i = 0
    n = len(norm)
    while i < n:
        ch = norm[i]
        if not _is_vowel(ch):
            i += 1
            continue
        # Silent/semivowel 'u' after q/g attaches to the following vowel.
        if (
            ch in ("u", "ü")
            and i > 0
            and norm[i - 1] in ("q", "g")
            and i + 1 < n
            and _is_vowel(norm[i + 1])
        ):
            i += 1
            continue
        nuclei += 1
        # Try to absorb one following vowel into this nucleus.
        if i + 1 < n and _is_vowel(norm[i + 1]):
            nxt = norm[i + 1]
            absorbed = False
            if nxt in _WEAK_UNACCENTED:
                # Falling diphthong (ai, eu, ou, ui, iu...), unless the
                # weak vowel starts its own nucleus before 'nh' (ra-i-nha).
                if not (nxt == "i" and norm[i + 2 : i + 4] == "nh"):
                    absorbed = True
            elif ch in _NASAL and nxt in ("e", "o", "i"):
                # Nasal diphthongs: ão, ãe, õe, ãi.
                absorbed = True
            if absorbed:
                i += 2
                continue
        i += 1
    return max(nuclei, 1)


def word_syllables(surface: str) -> int | None:
    """Syllables of a token surface, or None when nothing is syllabifiable.

    Strips non-letter characters and sums over the letter runs, so
    hyphenated compounds and tokens with stray punctuation still count.
    """
    runs: list[str] = []
    current: list[str] = []
    for ch in unicodedata.normalize("NFC", surface):
        if ch.isalpha():
            current.append(ch)
        elif current:
            runs.append("".join(current))
            current = []
    if current:
        runs.append("".join(current))
    if not runs:
        return None
    return sum(syllable_count(run) for run in runs)
