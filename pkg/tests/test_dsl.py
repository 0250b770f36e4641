import random

import pytest

from cenet.core import Fused2, Fused3, Link, Network, mirror
from cenet.dsl import ParseError, parse, serialize


class TestParse:
    def test_order8_sorter_string(self):
        network = parse("18-27-36-45-24=13=12=34=24=234=45-", 8)
        assert network.elements == (
            Link(1, 8), Link(2, 7), Link(3, 6), Link(4, 5),
            Link(2, 4), Link(5, 7),
            Link(1, 3), Link(6, 8),
            Link(1, 2), Link(7, 8),
            Link(3, 4), Link(5, 6),
            Link(2, 4), Link(5, 7),
            Fused2(2, 3, 4), Fused2(5, 6, 7),
            Link(4, 5),
        )
        assert network.link_count == 19

    def test_guard_plus_fused_pair(self):
        assert parse("13-123-", 3).elements == (Link(1, 3), Fused2(1, 2, 3))

    def test_mirror_expansion_at_order_three(self):
        assert parse("12=", 3).elements == (Link(1, 2), Link(2, 3))

    def test_self_symmetric_mirror_collapses(self):
        assert parse("45=", 8).elements == (Link(4, 5),)
        assert parse("45-", 8).elements == parse("45=", 8).elements

    def test_endpoints_canonicalized(self):
        assert parse("31-", 3).elements == (Link(1, 3),)
        assert parse("4231-", 4).elements == (Fused3(1, 2, 3, 4),)

    def test_whitespace_between_tokens(self):
        assert parse(" 13-\n123-\t", 3) == parse("13-123-", 3)

    def test_empty_document_is_empty_network(self):
        assert parse("", 3).elements == ()
        assert parse("  \n", 3).elements == ()

    def test_bracket_form(self):
        network = parse("[1,12]-[2,11]=", 12)
        assert network.elements == (Link(1, 12), Link(2, 11))  # mirror is itself
        assert parse("[3,4,5]-", 12).elements == (Fused2(3, 4, 5),)

    def test_four_endpoint_token(self):
        assert parse("1234-", 4).elements == (Fused3(1, 2, 3, 4),)

    def test_order_out_of_bounds(self):
        with pytest.raises(ValueError, match="order"):
            parse("12-", 1)
        with pytest.raises(ValueError, match="order"):
            parse("12-", 17)


class TestParseErrors:
    def offset_of(self, text, order):
        with pytest.raises(ParseError) as info:
            parse(text, order)
        return info.value.offset, str(info.value)

    def test_unknown_character(self):
        offset, message = self.offset_of("12-&34-", 4)
        assert offset == 3 and "'&'" in message

    def test_digit_zero(self):
        offset, message = self.offset_of("10-", 9)
        assert offset == 1 and "wire 0" in message

    def test_wire_beyond_order(self):
        offset, message = self.offset_of("15-", 3)
        assert offset == 1 and "exceeds" in message

    def test_duplicate_wire(self):
        offset, message = self.offset_of("11-", 3)
        assert offset == 1 and "duplicate" in message

    def test_dangling_wirelist(self):
        offset, message = self.offset_of("12-34", 4)
        assert offset == 5 and "terminator" in message

    def test_too_many_wires(self):
        offset, _ = self.offset_of("12345-", 9)
        assert offset == 4

    def test_single_wire_token(self):
        offset, message = self.offset_of("13-2-", 3)
        assert offset == 3 and "at least 2" in message

    def test_bracket_errors(self):
        assert self.offset_of("[1,2", 12)[0] == 4
        assert self.offset_of("[1]-", 12)[0] == 0
        assert self.offset_of("[1,x]-", 12)[1].startswith("offset 3")
        assert self.offset_of("[1,0]-", 12)[0] == 3
        assert self.offset_of("[1,2,3,4,5]-", 12)[0] == 9

    def test_offsets_point_into_source(self):
        for text in ("99-", "123", "1-", "[", "12=0"):
            with pytest.raises(ParseError) as info:
                parse(text, 9)
            assert 0 <= info.value.offset <= len(text)


class TestSerialize:
    def test_three_sorter(self):
        network = Network(3, (Link(2, 3), Link(1, 2), Link(2, 3)))
        assert serialize(network) == "23-12-23-"

    def test_fused_triple(self):
        assert serialize(Network(4, (Fused3(1, 2, 3, 4),))) == "1234-"

    def test_mirror_expansion_order_is_preserved(self):
        assert serialize(parse("24=13=", 8)) == "24-57-13-68-"

    def test_bracket_form_past_order_nine(self):
        network = Network(12, (Link(1, 10), Fused2(2, 6, 11)))
        text = serialize(network)
        assert text == "[1,10]-[2,6,11]-"
        assert parse(text, 12) == network

    def test_invalid_network_rejected(self):
        with pytest.raises(ValueError):
            serialize(Network(3, (Link(1, 9),)))


def random_network(rng, order):
    kinds = [Link, Link, Link, Fused2]
    if order >= 4:
        kinds.append(Fused3)
    elements = []
    for _ in range(rng.randint(0, 12)):
        kind = rng.choice(kinds)
        width = {Link: 2, Fused2: 3, Fused3: 4}[kind]
        elements.append(kind(*sorted(rng.sample(range(1, order + 1), width))))
    return Network(order, tuple(elements))


class TestRoundTrip:
    def test_random_networks(self):
        rng = random.Random(2024)
        for order in range(3, 10):
            for _ in range(100):
                network = random_network(rng, order)
                assert parse(serialize(network), order) == network

    def test_mirror_shorthand_equivalence(self):
        # XY= must parse the same as XY- followed by the serialized mirror
        rng = random.Random(9)
        for _ in range(300):
            order = rng.randint(3, 9)
            width = rng.choice([2, 3, 4])
            if width > order:
                continue
            wires = sorted(rng.sample(range(1, order + 1), width))
            token = "".join(str(w) for w in wires)
            kind = {2: Link, 3: Fused2, 4: Fused3}[width]
            element = kind(*wires)
            reflected = mirror(element, order)
            expansion = token + "-"
            if reflected != element:
                expansion += "".join(str(w) for w in reflected.endpoints) + "-"
            assert parse(token + "=", order) == parse(expansion, order)
