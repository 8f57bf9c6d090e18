"""Cable monodromy words: counts, positivity, oracle coherence, obstruction."""

from fractions import Fraction

import pytest

from cablekit.curves import algebraic_length, mat_mul, mod10_class
from cablekit.monodromy import (
    MonodromyError,
    branch_point_count,
    cable_p1_system,
    compose_cobordism_word,
    garside_block,
    monodromy_22_connected,
    monodromy_p1_connected,
    monodromy_p1_disconnected,
    monodromy_pq,
    negative_cable_word,
    p1_layout,
    resolution_word_r0,
    rho_p1_rotation,
    stein_obstruction_Lppm1,
    _inverse_matrix,
)
from cablekit.classify import resolve
from cablekit.library import shipped_scripts, sigma22_script_system
from cablekit.openbook import BindingComponent, RationalOpenBook, validate
from cablekit.words import DEHN, Generator, TwistWord


def connected_book(genus, word=None):
    return RationalOpenBook(
        genus=genus,
        components=(BindingComponent(1, 0),),
        monodromy=word,
    )


def disconnected_book(genus, n):
    return RationalOpenBook(
        genus=genus,
        components=tuple(BindingComponent(1, 0) for _ in range(n)),
        monodromy=TwistWord(()),
    )


class TestBranchPoints:
    def test_formula(self):
        assert branch_point_count(0, 2) == 2
        assert branch_point_count(1, 2) == 4
        assert branch_point_count(1, 3) == 6
        assert branch_point_count(2, 5) == 12

    def test_connected(self):
        for g in range(0, 5):
            assert branch_point_count(g, 1) == 2 * g + 1


class TestDisconnectedWord:
    def test_count_identity(self):
        for g in range(0, 6):
            for n in range(2, 7):
                for p in range(1, 6):
                    cw = monodromy_p1_disconnected(disconnected_book(g, n), p)
                    d = branch_point_count(g, n)
                    assert len(cw.word) == d * (p - 1)
                    assert cw.word.is_positive()

    def test_identity_monodromy_p1_trivial(self):
        cw = monodromy_p1_disconnected(disconnected_book(1, 2), 1)
        assert len(cw.word) == 0

    def test_page_data(self):
        cw = monodromy_p1_disconnected(disconnected_book(0, 2), 2)
        assert (cw.book.genus, cw.book.boundary_count_of_page) == (1, 2)

    def test_connected_routes_away(self):
        with pytest.raises(MonodromyError):
            monodromy_p1_disconnected(connected_book(1), 2)


class TestConnected22:
    def test_count_and_positivity(self):
        for g in range(1, 6):
            cw = monodromy_22_connected(connected_book(g, TwistWord(())))
            assert len(cw.word) == 2 * g + 1
            assert cw.word.is_positive()
            assert (cw.book.genus, cw.book.boundary_count_of_page) == (2 * g, 2)

    def test_disconnected_rejected(self):
        with pytest.raises(MonodromyError):
            monodromy_22_connected(disconnected_book(1, 2))


class TestConnectedP1:
    def test_counts(self):
        for g in range(1, 6):
            for p in range(2, 6):
                cw = monodromy_p1_connected(connected_book(g, TwistWord(())), p)
                d = 2 * g + 1
                negatives = [x for x in cw.word if x.sign < 0]
                positives = [x for x in cw.word if x.sign > 0]
                assert len(negatives) == 2 * (p - 1)
                assert all(x.curve.startswith("partial") for x in negatives)
                assert len(positives) == (p - 1) * d * (2 * d - 1)

    def test_p1_is_lift_only(self):
        word = TwistWord.twists("c1", "c2")
        cw = monodromy_p1_connected(connected_book(1, word), 1)
        assert [x.curve for x in cw.word] == ["n1_1", "n1_2"]

    def test_page_data(self):
        cw = monodromy_p1_connected(connected_book(1, TwistWord(())), 2)
        assert (cw.book.genus, cw.book.boundary_count_of_page) == (2, 1)


class TestPq:
    def test_marker_counts(self):
        book = connected_book(1, TwistWord(()))
        assert monodromy_pq(book, 3, 4).word.count(kind="stab") == 6
        assert monodromy_pq(book, 3, 1).word.count(kind="stab") == 0
        assert monodromy_pq(book, 2, 2).word.count(kind="stab") == 1

    def test_negative_rejected(self):
        with pytest.raises(MonodromyError):
            monodromy_pq(connected_book(1, TwistWord(())), 2, -1)

    def test_page_data_updates(self):
        book = connected_book(1, TwistWord(()))
        cw = monodromy_pq(book, 2, 2)
        assert (cw.book.genus, cw.book.boundary_count_of_page) == (2, 2)


class TestOracleCoherence:
    def test_22_equals_21_plus_script_after_destabilization_basis_change(self):
        # route A: the (2,2)-cable word on the cover system; route B: the
        # stabilized (2,1)-cable word pushed through the shipped script.
        # The two identifications differ by the destabilization change of
        # basis, which is -identity on the second nodule block.
        book = connected_book(1, TwistWord.twists("c1", "c2"))
        route_a = monodromy_22_connected(book)
        assert route_a.system is not None
        m_a = route_a.system.word_matrix(route_a.word)

        bundle = shipped_scripts()["stabilize_21_to_22"]
        result = bundle.replay()
        sys_b = bundle.registry.system
        m_b = sys_b.word_matrix(result.word)

        d = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, -1, 0), (0, 0, 0, -1))
        assert m_a == mat_mul(mat_mul(d, m_b), _inverse_matrix(d))

    def test_start_and_final_words_agree_on_homology(self):
        bundle = shipped_scripts()["stabilize_21_to_22"]
        sys_ = bundle.registry.system
        assert sys_.word_matrix(bundle.start) == sys_.word_matrix(bundle.expect)


class TestNegativeCable:
    def make_pattern(self, r, extra=2):
        gens = [Generator.fractional_boundary("1", Fraction(1, r))]
        gens += [Generator.dehn_twist("bdry_1")] * extra
        return RationalOpenBook(
            genus=1,
            components=(BindingComponent(r, -1),),
            monodromy=TwistWord(tuple(gens)),
        )

    def test_r3_shape(self):
        cw = negative_cable_word(self.make_pattern(3))
        # delta_{1/3} + inverse rotation (17) + partial1^{-1} + lifted phi (2)
        assert len(cw.word) == 1 + 17 + 1 + 2
        assert cw.word[0].kind == "fractional"
        assert cw.word[0].amount == Fraction(1, 3)
        comp = cw.book.components[0]
        assert (comp.order, comp.seifert_numerator) == (3, -1)
        assert cw.book.genus == 2

    def test_r2_boundary_power_vanishes(self):
        cw = negative_cable_word(self.make_pattern(2))
        # r = 2: rotation of the (1,1)-cable is empty and partial1^0 vanishes
        assert len(cw.word) == 1 + 0 + 0 + 2

    def test_wrong_form_rejected(self):
        book = RationalOpenBook(genus=1, components=(BindingComponent(3, -2),))
        with pytest.raises(MonodromyError):
            negative_cable_word(book)


class TestResolutionWord:
    def test_fig_lens_space_golden(self):
        # left trefoil book, -5 surgery, (5,0)-resolution: five positive
        # boundary twists and the two original negative twists
        from cablekit.classify import induced_open_book_from_surgery
        from cablekit.slopes import Slope

        trefoil = connected_book(1, TwistWord.twists(("c1", -1), ("c2", -1)))
        surgered = induced_open_book_from_surgery(trefoil, 0, Slope(-5))
        cw = resolution_word_r0(surgered)
        assert (cw.book.genus, cw.book.boundary_count_of_page) == (1, 5)
        assert cw.word.count(sign=-1) == 2
        assert cw.word.count(sign=1) == 5
        assert [g.curve for g in cw.word if g.sign > 0] == [
            f"rb0_{k}" for k in range(1, 6)
        ]

    def test_integral_component_untouched(self):
        book = RationalOpenBook(
            genus=1,
            components=(BindingComponent(1, 0),),
            monodromy=TwistWord.twists("c1"),
        )
        cw = resolution_word_r0(book)
        assert cw.word == book.monodromy

    def test_chi_matches_resolve(self):
        pattern = TestNegativeCable().make_pattern(3)
        resolved_book = resolve(pattern, [0])
        cw = resolution_word_r0(pattern)
        assert cw.book.page_euler_char == resolved_book.page_euler_char
        assert validate(cw.book) == []


class TestObstruction:
    def test_universal_for_p_up_to_100(self):
        for p in range(1, 101):
            report = stein_obstruction_Lppm1(p)
            assert report.algebraic_length == p - 8
            assert report.mod10_length == (p - 8) % 10
            assert report.required_mod10 == (p + 3) % 10
            assert report.obstructed

    def test_word_expands_via_chain_relations(self):
        report = stein_obstruction_Lppm1(1)
        # 15 Garside twists - 24 expanded boundary twists + 2 monodromy twists
        assert report.algebraic_length == -7
        assert "OBSTRUCTED" in report.summary()


class TestCobordism:
    def test_identity_pieces_give_rotation_alone(self):
        page = connected_book(1)
        cw = compose_cobordism_word(TwistWord(()), TwistWord(()), page)
        assert len(cw.word) == 3
        assert cw.word.is_positive()

    def test_certificate_passes(self):
        page = connected_book(1)
        cw = compose_cobordism_word(
            TwistWord.twists("c1"), TwistWord.twists("c2", "c1"), page
        )
        assert cw.notes["conjugation_lands_on_nodule_1"]
        assert cw.notes["rotation_positive"]

    def test_oracle_restriction(self):
        # conjugating the nodule-2 factor across the rotation lands it on
        # nodule 1: the output matrix equals (phi2 on nodule 1) o rotation o
        # (phi1 on nodule 1)
        page = connected_book(1)
        phi1, phi2 = TwistWord.twists("c1"), TwistWord.twists("c2")
        cw = compose_cobordism_word(phi1, phi2, page)
        sys_ = cw.system
        rot = monodromy_22_connected(page.with_monodromy(TwistWord(()))).word
        phi2_on_1 = TwistWord.twists("e2")
        phi1_on_1 = TwistWord.twists("e1")
        expected = phi2_on_1.compose(rot).compose(phi1_on_1)
        assert sys_.word_matrix(cw.word) == sys_.word_matrix(expected)

    def test_disconnected_page(self):
        page = disconnected_book(0, 2)
        cw = compose_cobordism_word(TwistWord(()), TwistWord(()), page)
        assert cw.word.is_positive()
        assert cw.notes["rotation_positive"]


class TestRotationStructure:
    def test_layout_chain_length(self):
        for g in range(1, 5):
            assert len(p1_layout(g, 1)) == 4 * g + 1

    def test_garside_block_length(self):
        for g in range(1, 6):
            d = 2 * g + 1
            assert len(garside_block(p1_layout(g, 1))) == d * (2 * d - 1)

    def test_rotation_squares_to_identity_on_homology(self):
        for g in (1, 2):
            sys_ = cable_p1_system(g, 2)
            rho = rho_p1_rotation(g, 2)
            m = sys_.word_matrix(rho.compose(rho))
            from cablekit.curves import identity_matrix

            assert m == identity_matrix(4 * g)


class TestExpandedCableWordShape:
    def test_expanded_21_cable_word_of_genus_one_book(self):
        # for the page-one-torus book with monodromy D_1^p o D_2 the
        # (2,1)-cable word expands to: 12 negative twists on the second
        # nodule chain, 12 negative on the first, the 15 positive Garside
        # twists, then the p+1 monodromy twists
        from cablekit.curves import _expand_to_nonseparating

        p = 3
        book = connected_book(1, TwistWord.twists(*(["c1"] * p + ["c2"])))
        cw = monodromy_p1_connected(book, 2)
        expanded = _expand_to_nonseparating(cw.word, cw.system)
        signs = [g.sign for g in expanded]
        assert signs[:24] == [-1] * 24
        assert signs[24:] == [1] * (15 + p + 1)
        assert all(g.curve.startswith("n2") for g in expanded[:12])
        assert all(g.curve.startswith("n1") for g in expanded[12:24])
        assert len(expanded) == 24 + 15 + p + 1

    def test_nodule_boundary_negatives_localized(self):
        for g in (1, 2):
            for p in (2, 3, 4):
                cw = monodromy_p1_connected(connected_book(g, TwistWord(())), p)
                negatives = [x for x in cw.word if x.sign < 0]
                # p-1 leading boundary twists plus one per rotation block
                leading = [x for x in cw.word[: p - 1]]
                assert all(x.sign < 0 for x in leading)
                assert len(negatives) == 2 * (p - 1)


class TestSurgeryRationalComponent:
    def test_half_integer_on_rational_component(self):
        from cablekit.classify import induced_open_book_from_surgery
        from cablekit.slopes import Slope

        book = RationalOpenBook(genus=1, components=(BindingComponent(3, -1),))
        out = induced_open_book_from_surgery(book, 0, Slope(-1, 2))
        comp = out.components[0]
        # |a*r - b*s| = |-3 + 2| = 1: the induced book is integral
        assert comp.order == 1
        assert dict(out.metadata).get("contact") == "admissible-surgery supported"

    def test_order_formula(self):
        from cablekit.classify import induced_open_book_from_surgery
        from cablekit.slopes import Slope

        book = RationalOpenBook(genus=1, components=(BindingComponent(3, -1),))
        out = induced_open_book_from_surgery(book, 0, Slope(-5, 3))
        assert out.components[0].order == abs(-5 * 3 - 3 * (-1))


class TestAnnulusCable:
    def test_22_cable_of_disk_book_is_one_twist(self):
        disk = RationalOpenBook(
            genus=0, components=(BindingComponent(1, 0),), monodromy=TwistWord(())
        )
        cw = monodromy_22_connected(disk)
        assert len(cw.word) == 1 and cw.word.is_positive()
        assert (cw.book.genus, cw.book.boundary_count_of_page) == (0, 2)


class TestRotationOrder:
    def test_p1_rotation_has_homology_order_p(self):
        # the rotation permutes the p nodules cyclically; its boundary-twist
        # corrections are homologically invisible, so its matrix has exact
        # order p
        from cablekit.curves import identity_matrix, mat_mul, mat_vec

        for g in (1, 2):
            for p in (2, 3, 4):
                cs = cable_p1_system(g, p)
                m = cs.word_matrix(rho_p1_rotation(g, p))
                acc = identity_matrix(2 * p * g)
                for k in range(1, p):
                    acc = mat_mul(acc, m)
                    assert acc != identity_matrix(2 * p * g), (g, p, k)
                assert mat_mul(acc, m) == identity_matrix(2 * p * g), (g, p)

    def test_rotation_sends_first_nodule_to_second(self):
        from cablekit.curves import mat_vec

        cs = cable_p1_system(1, 3)
        m = cs.word_matrix(rho_p1_rotation(1, 3))
        image = mat_vec(m, cs.curve("n1_1").homology)
        target = cs.curve("n2_1").homology
        assert image in (target, tuple(-x for x in target))
