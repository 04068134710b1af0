"""
Unit tests for the circuit/word compilers.

Tests lep words, the group-word contract 0x -> 0 f(x) x, inverse pairs,
compile reports and lep normalization.
"""

import pytest
from hypothesis import given, settings

from tests.fixtures.strategies import logic_circuits
from thompx.circuits.netlist import Circuit, CircuitBuilder, GateKind, parse_netlist, single_gate
from thompx.circuits.reversible import invert_reversible, toffoli_repr
from thompx.circuits.transforms import desugar, explicit_form
from thompx.circuits.truth_table import TruthTable, same_function
from thompx.compiler.group_words import (
    check_embedding_relation,
    check_pair_contract,
    check_stab01,
    check_wf_contract,
    compile_pair,
    compile_wf,
)
from thompx.compiler.lep import circuit_to_lep_word, lep_word_to_circuit, required_input_length
from thompx.compiler.normalize import expansion_ratios, lep_expansion, lep_normalize
from thompx.compiler.report import CompileReport
from thompx.core.errors import CompileError, ErrorCode
from thompx.generators.catalog import LP_GENERATORS
from thompx.generators.words import apply_word, eval_word, parse_word

NOT_BESIDE_INPUT = """\
circuit inputs=1 outputs=1
w1 = NOT in1
outputs in1
"""

SHARED_WIRES = """\
circuit inputs=1 outputs=2
w1 = NOT in1
w2 = AND in1 w1
w3 = OR w1 w2
w4,w5 = FORK in1
outputs w1 in1
"""


class TestLepWords:
    """Test circuits over the lep basis."""

    def test_single_and(self):
        assert str(circuit_to_lep_word(single_gate(GateKind.AND)).word) == "gamma_and"

    def test_operand_fetch(self):
        """Test operands are moved to the front with transpositions."""
        builder = CircuitBuilder(3)
        _, b, c = builder.inputs
        circuit = builder.build([builder.add1(GateKind.OR, b, c)])

        report = circuit_to_lep_word(circuit)

        for x in ("000", "010", "011", "101"):
            assert apply_word(report.word, x) == circuit.evaluate(x)

    def test_suffix_untouched(self, half_adder):
        """Test the word maps x s to C(x) s."""
        report = circuit_to_lep_word(desugar(half_adder))

        for x in ("00", "01", "10", "11"):
            assert apply_word(report.word, x + "101") == half_adder.evaluate(x) + "101"

    def test_sugar_rejected(self, half_adder):
        with pytest.raises(CompileError) as excinfo:
            circuit_to_lep_word(half_adder)
        assert excinfo.value.code is ErrorCode.NOT_DESUGARED

    def test_degenerate_shape(self):
        """Test n = 0 with m > 0 cannot be a lep word."""
        with pytest.raises(CompileError) as excinfo:
            circuit_to_lep_word(Circuit(1, (), ()))
        assert excinfo.value.code is ErrorCode.EMPTY_INPUT

    @settings(max_examples=40)
    @given(logic_circuits())
    def test_round_trip(self, circuit):
        """Test word -> circuit gives back the same function."""
        report = circuit_to_lep_word(circuit)
        rebuilt = lep_word_to_circuit(report.word, circuit.input_count)

        assert same_function(circuit, rebuilt)
        assert rebuilt.size == report.word_length + circuit.input_count + circuit.output_count

    def test_required_input_length(self):
        assert required_input_length(parse_word("gamma_fork gamma_and gamma_and")) == 2
        assert required_input_length(parse_word("tau(1,4)")) == 4

    def test_not_lep(self):
        with pytest.raises(CompileError) as excinfo:
            lep_word_to_circuit(parse_word("sigma"))
        assert excinfo.value.code is ErrorCode.NOT_LEP


class TestCompileWf:
    """Test W_f with 0x -> 0 f(x) x."""

    def test_and(self, and_circuit):
        """Test the AND gate on 11 gives 0111."""
        report = compile_wf(and_circuit)

        assert apply_word(report.word, "011") == "0111"
        assert check_wf_contract(report, and_circuit) == []
        assert report.source_size == 4

    def test_half_adder(self, half_adder):
        circuit = explicit_form(half_adder)

        assert check_wf_contract(compile_wf(circuit, debug=True), circuit) == []

    def test_group_word_only(self, and_circuit):
        """Test only G_{2,1} generators and transpositions appear."""
        allowed = {"sigma", "phi_not", "phi_or", "phi_and", "tau"}

        assert {t.name for t in compile_wf(and_circuit).word} <= allowed

    def test_not_desugared(self, half_adder):
        with pytest.raises(CompileError) as excinfo:
            compile_wf(half_adder)
        assert excinfo.value.code is ErrorCode.NOT_DESUGARED

    def test_empty_input(self):
        with pytest.raises(CompileError) as excinfo:
            compile_wf(Circuit(0, (), ()))
        assert excinfo.value.code is ErrorCode.EMPTY_INPUT

    def test_implicit_fanout_rejected(self):
        """Test a wire read twice without a FORK is refused."""
        circuit = parse_netlist(NOT_BESIDE_INPUT)

        with pytest.raises(CompileError) as excinfo:
            compile_wf(circuit)
        assert excinfo.value.code is ErrorCode.IMPLICIT_FANOUT

    @pytest.mark.parametrize(
        "text", [NOT_BESIDE_INPUT, SHARED_WIRES], ids=["dangling_not", "shared_wires"]
    )
    def test_explicit_form_meets_tau_bound(self, text):
        """Test forks made explicit keep every tau index within size^2 + 2."""
        circuit = parse_netlist(text)
        explicit = explicit_form(circuit)

        report = compile_wf(explicit)

        assert report.max_tau <= explicit.size**2 + 2
        assert check_wf_contract(report, circuit) == []

    def test_tau_bound_enforced(self, and_circuit, mocker):
        """Test an oversized transposition index is an error, not a warning."""
        mocker.patch.object(
            CompileReport, "max_tau", new_callable=mocker.PropertyMock, return_value=10**6
        )

        with pytest.raises(CompileError) as excinfo:
            compile_wf(and_circuit)
        assert excinfo.value.code is ErrorCode.TAU_BOUND_EXCEEDED

    @pytest.mark.slow
    @settings(max_examples=15)
    @given(logic_circuits(max_inputs=3, max_gates=5))
    def test_contract(self, circuit):
        explicit = explicit_form(circuit)
        report = compile_wf(explicit)

        assert check_wf_contract(report, circuit) == []
        assert report.max_tau <= explicit.size**2 + 2


class TestCompilePair:
    """Test words for inverse pairs."""

    def test_not_pair(self):
        """Test NOT is its own inverse and maps 0x to 0 not(x)."""
        gate = single_gate(GateKind.NOT)

        report = compile_pair(gate, gate)

        assert apply_word(report.word, "00") == "01"
        assert check_pair_contract(report, gate) == []
        assert check_embedding_relation(report, gate) == []

    def test_stab01_by_application(self):
        """Test the NOT pair fixes both cones; phi_not swaps them."""
        gate = single_gate(GateKind.NOT)
        tails = ["", "0110", "1111"]

        assert check_stab01(compile_pair(gate, gate), 1, tails) == []

        failures = check_stab01(CompileReport(parse_word("phi_not"), 0), 1, tails)
        assert {tag for tag, _ in failures} >= {"zero_cone", "cone"}

    @pytest.mark.slow
    def test_toffoli_pair(self):
        """Test a reversible circuit with its synthesized inverse."""
        forward = toffoli_repr(TruthTable(1, 1, ("1", "0")))

        report = compile_pair(forward, invert_reversible(forward))

        assert check_pair_contract(report, desugar(forward)) == []

    def test_not_inverse(self):
        gate = single_gate(GateKind.NOT)
        builder = CircuitBuilder(1)

        with pytest.raises(CompileError) as excinfo:
            compile_pair(gate, builder.build(builder.inputs))
        assert excinfo.value.code is ErrorCode.NOT_INVERSE_PAIR

    def test_cap(self):
        gate = single_gate(GateKind.SWAP)

        with pytest.raises(CompileError) as excinfo:
            compile_pair(gate, gate, cap=1)
        assert excinfo.value.code is ErrorCode.CAP_EXCEEDED


class TestCompileReport:
    """Test the report text format."""

    def test_round_trip(self, and_circuit):
        report = compile_wf(and_circuit)

        parsed = CompileReport.from_text(report.to_text())

        assert parsed == report
        assert parsed.summary() == report.summary()

    def test_trailer_format(self):
        report = CompileReport(parse_word("gamma_and tau(1,3)"), 4)

        assert report.to_text() == (
            "gamma_and tau(1,3)\n# source_size=4 word_length=2 max_tau=3\n"
        )
        assert report.ratio == pytest.approx(0.5)

    def test_trailer_mismatch(self):
        with pytest.raises(CompileError) as excinfo:
            CompileReport.from_text("gamma_and\n# source_size=4 word_length=3 max_tau=0\n")
        assert excinfo.value.code is ErrorCode.MALFORMED_INPUT

    def test_plain_word(self):
        assert CompileReport.from_text("gamma_not\n").source_size == 0


class TestLepNormalize:
    """Test rewriting lep-valued words over the lep basis."""

    def test_basis_word_kept(self):
        assert str(lep_normalize("gamma_and").word) == "gamma_and"

    @pytest.mark.parametrize("token", LP_GENERATORS, ids=str)
    def test_lp_generators(self, token):
        """Test N, C and T get lep-basis words with the same value."""
        report = lep_expansion(token)

        assert all(t.is_tau or t.name.startswith("gamma_") for t in report.word)
        assert eval_word(report.word) == eval_word([token])

    def test_mixed_word(self):
        """Test a word through phi_not and C is normalized."""
        word = parse_word("gamma_fork C gamma_and phi_not")
        report = lep_normalize(word)

        assert eval_word(report.word) == eval_word(word)

    def test_not_lep(self):
        with pytest.raises(CompileError) as excinfo:
            lep_normalize("sigma")
        assert excinfo.value.code is ErrorCode.NOT_LEP

    def test_expansion_ratios(self):
        ratios = dict(expansion_ratios(LP_GENERATORS))

        assert set(ratios) == {"N", "C", "T"}
        assert all(length >= 1 for length in ratios.values())
