import dataclasses

import pytest

from nonhaus.audit import (
    FAILS,
    HOLDS,
    HOLDS_NON_UNIQUELY,
    NOT_CHECKED,
    recheck_report,
    run_audit,
    shrink_contraction_record,
)
from nonhaus.errors import OriginCountOutOfRange
from nonhaus.space import SpaceConfig, TopologyModel

Q2 = SpaceConfig(2, TopologyModel.QUOTIENT)
P2 = SpaceConfig(2, TopologyModel.PSEUDOMETRIC)


@pytest.fixture(scope="module")
def report():
    return run_audit(Q2)


class TestAuditTable:
    def test_quotient_expectations(self, report):
        expect = {
            "separation-t1": HOLDS,
            "separation-hausdorff": FAILS,
            "locally-euclidean-at-origins": HOLDS,
            "origin-filter-coincidence": FAILS,
            "pi1-trivial": FAILS,
            "contractible": FAILS,
            "even-covering": FAILS,
            "branched-cover": FAILS,
            "etale-separated": FAILS,
            "unique-path-lifting": FAILS,
            "homotopy-lifting": FAILS,
            "homotopy-lifting-origin-constancy": FAILS,
            "monodromy-defined": FAILS,
            "deck-group-symmetric": HOLDS,
            "semicovering": FAILS,
            "subgroup-correspondence": FAILS,
            "groupoid-covering": NOT_CHECKED,
            "stacky-cover": NOT_CHECKED,
        }
        got = {c.claim_id: c.verdict("quotient") for c in report.claims}
        assert got == expect

    def test_pseudometric_expectations(self, report):
        expect = {
            "separation-t1": FAILS,
            "separation-hausdorff": FAILS,
            "locally-euclidean-at-origins": FAILS,
            "origin-filter-coincidence": HOLDS,
            "pi1-trivial": HOLDS,
            "contractible": HOLDS,
            "even-covering": FAILS,
            "branched-cover": FAILS,
            "etale-separated": FAILS,
            "unique-path-lifting": FAILS,
            "homotopy-lifting": HOLDS_NON_UNIQUELY,
            "homotopy-lifting-origin-constancy": FAILS,
            "monodromy-defined": FAILS,
            "deck-group-symmetric": HOLDS,
            "semicovering": FAILS,
            "subgroup-correspondence": FAILS,
            "groupoid-covering": NOT_CHECKED,
            "stacky-cover": NOT_CHECKED,
        }
        got = {c.claim_id: c.verdict("pseudometric") for c in report.claims}
        assert got == expect

    def test_model_split_recorded(self, report):
        pi1 = next(c for c in report.claims if c.claim_id == "pi1-trivial")
        assert pi1.verdict("quotient") == FAILS
        assert pi1.verdict("pseudometric") == HOLDS
        probe = report.certificate("pi1-probe")
        assert len(probe.quotient_class) == 2
        assert len(probe.pseudometric_class) == 0

    def test_checked_rows_reference_certificates(self, report):
        certmap = dict(report.certificates)
        for claim in report.claims:
            for model, verdict in claim.verdicts:
                ref = claim.certificate_ref(model)
                if verdict in (HOLDS, FAILS, HOLDS_NON_UNIQUELY):
                    assert ref is not None
                    assert ref in certmap
                else:
                    assert ref is None

    def test_deck_order_row(self):
        doc = run_audit(SpaceConfig(3, TopologyModel.QUOTIENT))
        table = doc.certificate("deck-group:any")
        assert len(table.elements) == 6
        row = next(c for c in doc.claims if c.claim_id == "deck-group-symmetric")
        assert "order 6" in row.statement

    def test_recheck_green(self, report):
        assert recheck_report(report) == []

    def test_k_validated(self):
        with pytest.raises(OriginCountOutOfRange):
            run_audit(SpaceConfig(7))

    def test_pseudometric_run_matches(self):
        doc = run_audit(P2)
        assert doc.model == "pseudometric"
        assert {c.claim_id for c in doc.claims} == {
            c.claim_id for c in run_audit(Q2).claims
        }


class TestRecheckFailures:
    def test_tampered_loop_class(self, report):
        probe = report.certificate("pi1-probe")
        bad_probe = dataclasses.replace(
            probe, quotient_class=probe.pseudometric_class
        )
        certs = tuple(
            (ref, bad_probe if ref == "pi1-probe" else cert)
            for ref, cert in report.certificates
        )
        bad = dataclasses.replace(report, certificates=certs)
        assert any("pi1-probe" in f for f in recheck_report(bad))

    def test_tampered_even_cover(self, report):
        from nonhaus.space import Regular

        cert = report.certificate("even-covering:quotient")
        bad_cert = dataclasses.replace(
            cert,
            witnesses=(dataclasses.replace(cert.witnesses[0], common=Regular(9)),),
        )
        certs = tuple(
            (ref, bad_cert if ref == "even-covering:quotient" else c)
            for ref, c in report.certificates
        )
        bad = dataclasses.replace(report, certificates=certs)
        assert any("even-covering:quotient" in f for f in recheck_report(bad))

    def test_dangling_reference(self, report):
        certs = tuple((ref, c) for ref, c in report.certificates if ref != "pi1-probe")
        bad = dataclasses.replace(report, certificates=certs)
        assert any("dangling" in f for f in recheck_report(bad))

    def test_shrink_record(self):
        rec = shrink_contraction_record(3)
        assert rec.ok
