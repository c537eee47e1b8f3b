from afmatrix.prng import SplitMix64


def test_reference_vector():
    rng = SplitMix64(1234567)
    assert [rng.next_u64() for _ in range(5)] == [
        6457827717110365317,
        3203168211198807973,
        9817491932198370423,
        4593380528125082431,
        16408922859458223821,
    ]


def test_float_histogram_vector():
    rng = SplitMix64(987654321)
    counts = [0] * 5
    for _ in range(100_000):
        counts[int(rng.next_float() * 5)] += 1
    assert counts == [20027, 19892, 20073, 19978, 20030]


def test_seed_wraps_to_64_bits():
    assert SplitMix64(2**64 + 7).next_u64() == SplitMix64(7).next_u64()
