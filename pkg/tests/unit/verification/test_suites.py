"""
Unit tests for the property suites and seeded samplers.
"""

import pytest

from thompx.core.errors import ErrorCode, ThompxError
from thompx.verification.sampling import (
    make_rng,
    random_bits,
    random_circuit,
    random_code,
    random_group_element,
    random_lep_word,
    random_maximal_code,
    random_word,
    reversible_sample,
)
from thompx.verification.suites import (
    PAIR_STREAM,
    SUITE_NAMES,
    SUITES,
    CheckStatus,
    SuiteRunner,
    format_details,
    run_suite,
)


class TestSamplers:
    """Test the seeded random generators."""

    def test_same_seed_same_samples(self):
        first, second = make_rng(7), make_rng(7)

        assert random_word(first, 9) == random_word(second, 9)
        assert random_code(first, 5, 4) == random_code(second, 5, 4)
        assert random_group_element(first, 4) == random_group_element(second, 4)

    def test_maximal_code(self, rng):
        code = random_maximal_code(rng, 4, 5)

        assert code.is_maximal
        assert code.max_length <= 4

    def test_group_element(self, rng):
        for _ in range(10):
            assert random_group_element(rng, 4).in_g

    def test_circuit_consumes_inputs(self, rng):
        """Test every input feeds some gate."""
        circuit = random_circuit(rng, 3, 5)
        read = {w for g in circuit.gates for w in g.inputs}

        assert {"in1", "in2", "in3"} <= read

    def test_lep_word(self, rng):
        word, element = random_lep_word(rng, 4)

        assert len(word) >= 1
        assert element.is_lep

    def test_random_bits(self, rng):
        bits = random_bits(rng, 12)

        assert len(bits) == 12
        assert set(bits) <= {"0", "1"}

    def test_reversible_sample(self):
        """Test the shared sample has 50 circuits on at most 4 lines."""
        sample = reversible_sample(make_rng(0))

        assert len(sample) == 50
        assert all(1 <= c.input_count <= 4 for c in sample)
        assert all(c.input_count == c.output_count for c in sample)


class TestSuiteRunner:
    """Test property registration and result statuses."""

    def test_every_suite_registered(self):
        assert set(SUITE_NAMES) == set(SUITES)

    def test_unknown_suite(self):
        with pytest.raises(ThompxError) as excinfo:
            SuiteRunner("nope", seed=0)
        assert excinfo.value.code is ErrorCode.MALFORMED_INPUT

    def test_failures_and_errors(self):
        """Test failing samples give FAILED and exceptions give ERROR."""
        runner = SuiteRunner("codes", seed=0)

        failed = runner.check(0, "always_fails", lambda rng, jobs: (1, ["x"], {}))
        broken = runner.check(1, "raises", lambda rng, jobs: 1 / 0)

        assert failed.status is CheckStatus.FAILED
        assert broken.status is CheckStatus.ERROR
        assert broken.message.startswith("ZeroDivisionError")

    def test_codes_suite(self):
        report = run_suite("codes", seed=0)

        assert report.passed
        assert len(report.results) == len(SUITES["codes"])

    def test_only(self):
        """Test a single property can be rerun alone."""
        report = run_suite("codes", seed=3, only=["intersection_commutes"])

        assert [r.name for r in report.results] == ["intersection_commutes"]
        assert list(report.to_frame().columns) == [
            "property", "status", "checked", "failures", "seconds", "details"
        ]

    def test_reproducible(self):
        first = run_suite("generators", seed=11, only=["word_inverse"])
        second = run_suite("generators", seed=11, only=["word_inverse"])

        assert first.results[0].checked == second.results[0].checked
        assert first.results[0].details == second.results[0].details

    def test_shared_stream(self):
        """Test properties on one stream start from the same draws."""
        runner = SuiteRunner("compiler", seed=4)

        def draw(rng, jobs):
            return 1, [], {"first": int(rng.integers(10**9))}

        first = runner.check(PAIR_STREAM, "a", draw)
        second = runner.check(PAIR_STREAM, "b", draw)
        other = runner.check(0, "c", draw)

        assert first.details == second.details
        assert other.details != first.details

    def test_pair_properties_share_circuits(self):
        """Test the pair, embedding and Schreier checks see one sample."""
        streams = {
            name: stream for suite in ("compiler", "metrics") for name, _, stream in SUITES[suite]
        }

        assert streams["pair_contract"] == PAIR_STREAM
        assert streams["pair_element_laws"] == PAIR_STREAM
        assert streams["schreier_upper_bound"] == PAIR_STREAM

    def test_format_details(self):
        assert format_details({"ratio": 1 / 3, "radius": 5}) == "ratio=0.3333; radius=5"
        assert format_details({}) == ""

    def test_details_in_frame(self):
        """Test measured constants reach the result table."""
        report = run_suite("thompson", seed=0, only=["direct_composable_chains"])

        details = report.to_frame()["details"].iloc[0]

        assert details.startswith("empty_composites=")

    @pytest.mark.slow
    def test_pair_element_laws(self):
        """Test the cone checks finish on the full 50-circuit sample."""
        result = run_suite("compiler", seed=0, only=["pair_element_laws"]).results[0]

        assert result.status is CheckStatus.PASSED
        assert result.checked == 50

    @pytest.mark.slow
    def test_wf_contract_bound(self):
        """Test no compiled circuit exceeds the transposition bound."""
        result = run_suite("compiler", seed=0, only=["wf_contract"]).results[0]

        assert result.status is CheckStatus.PASSED
        assert not [f for f in result.failures if f[0] == "max_tau"]

    @pytest.mark.slow
    def test_schreier_reports_unresolved(self):
        result = run_suite("metrics", seed=0, only=["schreier_upper_bound"]).results[0]

        assert result.status is CheckStatus.PASSED
        assert result.checked + result.details["unresolved"] == 50
        assert result.details["radius"] >= 3

    @pytest.mark.slow
    @pytest.mark.parametrize(
        "suite", ["thompson", "generators", "circuits", "compiler", "metrics"]
    )
    def test_suite_passes(self, suite):
        assert run_suite(suite, seed=0).passed
