from meadows import dump_structure, load_structure, zmod_ring
from meadows.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEval:
    def test_md6_arithmetic(self, capsys):
        code, out, _ = run(capsys, "eval", "2*2^-1", "--model", "mdk:6")
        assert (code, out) == (0, "4\n")

    def test_rational_unsafe_flag(self, capsys):
        code, out, _ = run(capsys, "eval", "0^-1", "--model", "q")
        assert (code, out) == (0, "0 (unsafe)\n")

    def test_prime_field_constant(self, capsys):
        code, out, _ = run(capsys, "eval", "1", "--model", "zp:5")
        assert (code, out) == (0, "1\n")

    def test_rational_assignment(self, capsys):
        code, out, _ = run(
            capsys, "eval", "x/x", "--model", "q", "--assign", "x=-3/4"
        )
        assert (code, out) == (0, "1\n")

    def test_unbound_variable_exit_code(self, capsys):
        code, _, err = run(capsys, "eval", "x+y", "--model", "mdk:6",
                           "--assign", "x=1")
        assert code == 3
        assert "y" in err

    def test_parse_error_exit_code(self, capsys):
        code, _, err = run(capsys, "eval", "x+*", "--model", "mdk:6")
        assert code == 2 and err

    def test_bad_model_exit_code(self, capsys):
        code, _, err = run(capsys, "eval", "1", "--model", "zp:9")
        assert code == 2
        assert "not prime" in err


class TestCheck:
    def test_valid_axiom(self, capsys):
        code, out, _ = run(
            capsys, "check", "x*(x*x^-1)=x", "--model", "mdk:30"
        )
        assert code == 0
        assert "Md_30\tvalid\t-" in out

    def test_implicit_inverse_across_models(self, capsys):
        code, out, _ = run(
            capsys, "check", "x*y=1 -> inv(x)=y",
            "--model", "mdk:6", "--model", "zp:7",
        )
        assert code == 0
        assert out.count("valid") >= 2

    def test_invalid_with_witness_and_exit_one(self, capsys):
        code, out, _ = run(
            capsys, "check", "(1+1)*(1+1)^-1=1", "--model", "zp:2"
        )
        assert code == 1
        assert "Z_2\tinvalid\t{}" in out

    def test_open_failure_prints_witness(self, capsys):
        code, out, _ = run(capsys, "check", "x*x^-1=1", "--model", "mdk:6")
        assert code == 1
        assert "Md_6\tinvalid\tx=0" in out

    def test_rational_model_row(self, capsys):
        code, out, _ = run(
            capsys, "check", "inv(inv(x))=x", "--model", "q",
            "--samples", "200",
        )
        assert code == 0
        assert out.startswith("Q0\tvalid\t-")

    def test_rational_counterexample(self, capsys):
        code, out, _ = run(
            capsys, "check", "x*x^-1=1", "--model", "q", "--samples", "200"
        )
        assert code == 1
        assert "Q0\tinvalid\tx=0" in out

    def test_summary_line(self, capsys):
        _, out, _ = run(
            capsys, "check", "x+0=x", "--model", "zp:2", "--model", "mdk:6"
        )
        assert "# fields: valid\tmeadows: valid\tagree: yes" in out

    def test_product_model(self, capsys):
        code, out, _ = run(
            capsys, "check", "x*(x*x^-1)=x", "--model", "prod:zp:2,zp:3"
        )
        assert code == 0
        assert "(Z_2 x Z_3)" in out

    def test_galois_model(self, capsys):
        code, out, _ = run(capsys, "check", "inv(x)=x*x", "--model", "gf:2,2")
        assert code == 0

    def test_guarded_conditional_on_rationals(self, capsys):
        code, out, _ = run(
            capsys, "check", "x != 0 -> x*x^-1 = 1", "--model", "q",
            "--samples", "200",
        )
        assert code == 0
        assert out.startswith("Q0\tvalid")

    def test_disequation_conclusion(self, capsys):
        code, out, _ = run(capsys, "check", "0 != 1", "--model", "mdk:6")
        assert code == 0
        code, out, _ = run(capsys, "check", "0 != 1", "--model", "mdk:1")
        assert code == 1
        assert "Md_1\tinvalid\t{}" in out

    def test_seed_changes_sampling_reproducibly(self, capsys):
        first = run(capsys, "check", "inv(inv(x))=x", "--model", "q",
                    "--samples", "50", "--seed", "7")
        second = run(capsys, "check", "inv(inv(x))=x", "--model", "q",
                     "--samples", "50", "--seed", "7")
        assert first == second


class TestTable:
    def test_md6_inverse_row(self, capsys):
        code, out, _ = run(capsys, "table", "mdk:6")
        assert code == 0
        assert "inv:\n0 1 2 3 4 5\n" in out

    def test_md10_inverse_row(self, capsys):
        code, out, _ = run(capsys, "table", "mdk:10")
        assert code == 0
        assert "inv:\n0 1 8 7 4 5 6 3 2 9\n" in out

    def test_output_is_loadable(self, capsys):
        _, out, _ = run(capsys, "table", "gf:2,2")
        s = load_structure(out)
        assert s.size == 4 and s.name == "GF(2^2)"

    def test_rationals_have_no_table(self, capsys):
        code, _, err = run(capsys, "table", "q")
        assert code == 2 and err


class TestEncode:
    def test_three_premise_display(self, capsys):
        code, out, _ = run(capsys, "encode", "t1=0 & t2=0 & t3=0 -> t=0")
        assert code == 0
        from meadows import encode_conditional, format_equation, parse_conditional

        expected = format_equation(
            encode_conditional(parse_conditional("t1=0 & t2=0 & t3=0 -> t=0"))
        )
        assert out == expected + "\n"
        assert out.endswith("= 0\n")

    def test_bare_equation_is_normalized(self, capsys):
        code, out, _ = run(capsys, "encode", "t=0")
        assert (code, out) == (0, "t-0 = 0\n")

    def test_guarded_premise_rejected(self, capsys):
        code, _, err = run(capsys, "encode", "x != 0 -> x*x^-1 = 1")
        assert code == 2
        assert "disequation" in err


class TestExpand:
    def test_regular_ring_gets_inverse_row(self, capsys, tmp_path):
        path = tmp_path / "z6.ring"
        path.write_text(dump_structure(zmod_ring(6)), encoding="utf-8")
        code, out, _ = run(capsys, "expand", str(path))
        assert code == 0
        assert "inv:\n0 1 2 3 4 5\n" in out
        assert load_structure(out).inv == (0, 1, 2, 3, 4, 5)

    def test_non_regular_ring_exit_five(self, capsys, tmp_path):
        path = tmp_path / "z4.ring"
        path.write_text(dump_structure(zmod_ring(4)), encoding="utf-8")
        code, out, err = run(capsys, "expand", str(path))
        assert code == 5
        assert err.strip() == "not regular: witness 2"
        assert out == ""

    def test_existing_inverse_row_is_recomputed(self, capsys, tmp_path):
        from dataclasses import replace

        wrong = replace(zmod_ring(6), inv=(0, 1, 3, 2, 5, 4))
        path = tmp_path / "z6-wrong.struct"
        path.write_text(dump_structure(wrong), encoding="utf-8")
        code, out, _ = run(capsys, "expand", str(path))
        assert code == 0
        assert load_structure(out).inv == (0, 1, 2, 3, 4, 5)

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "expand", "/nonexistent/ring")
        assert code == 2 and err


class TestDecompose:
    def test_md30(self, capsys):
        code, out, _ = run(capsys, "decompose", "mdk:30")
        assert code == 0
        assert "components: 3" in out
        assert "component 1: onto Z_2 size 2" in out
        assert "component 2: onto Z_3 size 3" in out
        assert "component 3: onto Z_5 size 5" in out
        assert "product size: 30" in out
        assert "diagonal injective: yes" in out

    def test_trivial_exit_six(self, capsys):
        code, _, err = run(capsys, "decompose", "mdk:1")
        assert code == 6 and err


class TestClassify:
    def test_rows_up_to_seven(self, capsys):
        code, out, _ = run(capsys, "classify", "--bound", "7")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "# k\tsize\tcharacteristic\tminimal\tfield"
        assert "6\t6\t6\tyes\tno" in lines
        assert "7\t7\t7\tyes\tyes" in lines
        assert "1\t1\t1\tyes\tno" in lines


class TestPlumbing:
    def test_byte_determinism(self, capsys):
        first = run(capsys, "classify", "--bound", "15")
        second = run(capsys, "classify", "--bound", "15")
        assert first == second

    def test_out_flag_writes_file(self, capsys, tmp_path):
        target = tmp_path / "table.txt"
        code, out, _ = run(capsys, "table", "mdk:6", "--out", str(target))
        assert code == 0
        assert out == ""
        assert "inv:\n0 1 2 3 4 5\n" in target.read_text(encoding="utf-8")

    def test_file_model_round_trip(self, capsys, tmp_path):
        path = tmp_path / "md6.struct"
        first = run(capsys, "table", "mdk:6", "--out", str(path))
        assert first[0] == 0
        code, out, _ = run(capsys, "eval", "2*2^-1", "--model", f"file:{path}")
        assert (code, out) == (0, "4\n")

    def test_unknown_model_prefix(self, capsys):
        code, _, err = run(capsys, "eval", "1", "--model", "weird:3")
        assert code == 2 and err

    def test_size_bound_exit_code(self, capsys):
        code, _, err = run(capsys, "table", "gf:2,21")
        assert code == 4
        assert "bound" in err
