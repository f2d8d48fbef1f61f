import random
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from swapornot import (
    DomainError,
    FormatSpec,
    ParameterError,
    PrfKey,
    RoundCapExceeded,
    decode_digits,
    encode_digits,
    fpe_decrypt,
    fpe_encrypt,
    plan_rounds,
)
from swapornot.fpe import (
    format_golden_vectors,
    generate_golden_vectors,
    parse_golden_vectors,
)

KEY = PrfKey.from_hex("000102030405060708090a0b0c0d0e0f101112131415161718191a1b1c1d1e1f")
VECTOR_FILE = Path(__file__).parent / "data" / "golden_vectors.txt"


def test_encode_examples():
    assert encode_digits("000", FormatSpec(10, 3)) == 0
    assert encode_digits("042", FormatSpec(10, 3)) == 42
    assert encode_digits("zz", FormatSpec(36, 2)) == 1295


def test_decode_examples():
    assert decode_digits(0, FormatSpec(10, 3)) == "000"
    assert decode_digits(42, FormatSpec(10, 3)) == "042"
    assert decode_digits(1295, FormatSpec(36, 2)) == "zz"


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 36), st.integers(1, 10), st.data())
def test_codec_roundtrip(radix, length, data):
    spec = FormatSpec(radix, length)
    value = data.draw(st.integers(0, spec.domain_size - 1))
    text = decode_digits(value, spec)
    assert len(text) == length
    assert set(text) <= set(spec.alphabet)
    assert encode_digits(text, spec) == value


def test_codec_errors():
    spec = FormatSpec(10, 3)
    with pytest.raises(DomainError):
        encode_digits("12", spec)
    with pytest.raises(DomainError):
        encode_digits("12a", spec)
    with pytest.raises(DomainError):
        encode_digits("12A", spec)
    with pytest.raises(DomainError):
        decode_digits(1000, spec)
    with pytest.raises(DomainError):
        decode_digits(-1, spec)


def test_format_spec_validation():
    with pytest.raises(DomainError):
        FormatSpec(1, 3)
    with pytest.raises(DomainError):
        FormatSpec(37, 3)
    with pytest.raises(DomainError):
        FormatSpec(10, 0)
    with pytest.raises(DomainError):
        FormatSpec(36, 25)  # 36**25 > 2**128
    assert FormatSpec(2, 128).domain_size == 1 << 128


@pytest.mark.parametrize("radix,length", [(10, 9), (10, 16), (36, 6)])
def test_roundtrip_and_format_preservation(radix, length):
    spec = FormatSpec(radix, length)
    alphabet = spec.alphabet
    rng = random.Random(1234)
    for _ in range(100):
        plaintext = "".join(rng.choice(alphabet) for _ in range(length))
        ciphertext = fpe_encrypt(KEY, spec, plaintext, b"tw", 12)
        assert len(ciphertext) == length
        assert set(ciphertext) <= set(alphabet)
        assert fpe_decrypt(KEY, spec, ciphertext, b"tw", 12) == plaintext


def test_tweak_changes_ciphertext():
    spec = FormatSpec(10, 9)
    a = fpe_encrypt(KEY, spec, "123456789", b"", 10)
    b = fpe_encrypt(KEY, spec, "123456789", b"\xff", 10)
    assert a != b


def test_xor_law_roundtrip():
    spec = FormatSpec(16, 4)  # N = 65536, a power of two
    ct = fpe_encrypt(KEY, spec, "00ff", b"", 10, xor_law=True)
    assert fpe_decrypt(KEY, spec, ct, b"", 10, xor_law=True) == "00ff"
    assert ct != fpe_encrypt(KEY, spec, "00ff", b"", 10)  # law changes the permutation


def test_xor_law_needs_power_of_two():
    with pytest.raises(ParameterError):
        fpe_encrypt(KEY, FormatSpec(10, 9), "123456789", b"", 10, xor_law=True)


def test_rounds_floor():
    spec = FormatSpec(10, 9)
    with pytest.raises(ParameterError):
        fpe_encrypt(KEY, spec, "123456789", b"", 1)
    with pytest.raises(ParameterError):
        fpe_encrypt(KEY, spec, "123456789", b"", 0)


def test_malformed_plaintext():
    spec = FormatSpec(10, 9)
    with pytest.raises(DomainError):
        fpe_encrypt(KEY, spec, "12345678", b"", 10)
    with pytest.raises(DomainError):
        fpe_encrypt(KEY, spec, "12345678x", b"", 10)


def test_plan_rounds_with_budget():
    spec = FormatSpec(10, 9)
    rounds = plan_rounds(spec, queries=10**8)
    assert rounds % 2 == 0
    assert rounds <= 340
    # auto-rounds plumb through encrypt/decrypt deterministically
    ct = fpe_encrypt(KEY, spec, "987654321", b"", None, queries=10**8)
    assert fpe_decrypt(KEY, spec, ct, b"", None, queries=10**8) == "987654321"


def test_plan_rounds_default_budget_unreachable():
    # The default budget is q = N-1, which needs ~8N rounds; the planner
    # must say so rather than silently weakening the target.
    with pytest.raises(RoundCapExceeded):
        plan_rounds(FormatSpec(10, 9))


def test_golden_vectors_match_frozen_file():
    assert format_golden_vectors(generate_golden_vectors()) == VECTOR_FILE.read_text()


def test_golden_vectors_regeneration_is_stable():
    assert format_golden_vectors(generate_golden_vectors()) == format_golden_vectors(
        generate_golden_vectors()
    )


def test_golden_vectors_verify_and_invert():
    for v in parse_golden_vectors(VECTOR_FILE.read_text()):
        spec = FormatSpec(v.radix, v.length)
        key = PrfKey.from_hex(v.key_hex)
        tweak = bytes.fromhex(v.tweak_hex)
        assert fpe_encrypt(key, spec, v.plaintext, tweak, v.rounds) == v.ciphertext
        assert fpe_decrypt(key, spec, v.ciphertext, tweak, v.rounds) == v.plaintext


def test_vector_file_rejects_other_prf():
    bad = "# swapornot golden vectors format=1 prf=something-else\n"
    with pytest.raises(ParameterError):
        parse_golden_vectors(bad)
