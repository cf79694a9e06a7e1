#!/usr/bin/env python
# -*- coding:utf-8 -*-
# project : compacta
# filename : fields
# author : ly_13
# date : 3/12/2025

from django.utils.translation import gettext_lazy as _

from rest_framework import serializers

from apps.compacta.arith import format_rat, parse_rat
from apps.compacta.exceptions import PreconditionViolation
from apps.compacta.metric.spaces import real_box_space, real_line


class RationalField(serializers.Field):
    """Rational given as an integer or a string such as "-7/2" or "1.25"; floats are refused."""

    default_error_messages = {
        "invalid": _('Expected a rational such as "3", "-7/2" or "1.25".'),
        "not_positive": _("Expected a positive rational, got {value}."),
    }

    def __init__(self, positive=False, **kwargs):
        self.positive = positive
        super().__init__(**kwargs)

    def to_internal_value(self, data):
        try:
            value = parse_rat(data)
        except PreconditionViolation:
            self.fail("invalid")
        if self.positive and value <= 0:
            self.fail("not_positive", value=format_rat(value))
        return value

    def to_representation(self, value):
        return format_rat(value)


class PointField(serializers.ListField):
    """Rational coordinates; a bare rational is a point of the real line."""

    def __init__(self, **kwargs):
        kwargs.setdefault("child", RationalField())
        kwargs.setdefault("min_length", 1)
        super().__init__(**kwargs)

    def to_internal_value(self, data):
        if not isinstance(data, list):
            data = [data]
        return tuple(super().to_internal_value(data))


class SpaceField(serializers.Field):
    default_error_messages = {
        "invalid": _('Expected "R" or {"Rn": d} with d a positive integer.'),
    }

    def to_internal_value(self, data):
        if data == "R":
            return real_line()
        if isinstance(data, dict) and set(data) == {"Rn"}:
            dimension = data["Rn"]
            if isinstance(dimension, int) and not isinstance(dimension, bool) and dimension >= 1:
                return real_box_space(dimension)
        self.fail("invalid")

    def to_representation(self, value):
        if value.name == "R":
            return "R"
        return {"Rn": value.dimension}


class BoxField(serializers.ListField):
    def __init__(self, **kwargs):
        kwargs.setdefault("child", serializers.ListField(child=RationalField(), min_length=2, max_length=2))
        kwargs.setdefault("min_length", 1)
        super().__init__(**kwargs)

    def to_internal_value(self, data):
        box = super().to_internal_value(data)
        for i, (lo, hi) in enumerate(box):
            if lo > hi:
                raise serializers.ValidationError({i: [_("Interval [{}, {}] is reversed.").format(lo, hi)]})
        return [tuple(interval) for interval in box]


class NetOfBoxSerializer(serializers.Serializer):
    box = BoxField()
    spacing = RationalField(positive=True)


class CompactField(serializers.Field):
    """
    One compact constructor: {"points": [...]}, {"net_of_box": {...}}, {"box": [...]} or
    {"union": [C1, C2]}. The result is a normalized description; compacts are built once the
    space is known.
    """

    default_error_messages = {
        "invalid": _("Expected exactly one of points, net_of_box, box or union."),
    }
    kinds = ("points", "net_of_box", "box", "union")

    def to_internal_value(self, data):
        if not isinstance(data, dict) or len(data) != 1 or next(iter(data)) not in self.kinds:
            self.fail("invalid")
        kind, value = next(iter(data.items()))
        if kind == "points":
            field = serializers.ListField(child=PointField(), min_length=1)
        elif kind == "net_of_box":
            field = NetOfBoxSerializer()
        elif kind == "box":
            field = BoxField()
        else:
            field = serializers.ListField(child=CompactField(), min_length=2, max_length=2)
        try:
            return kind, field.run_validation(value)
        except serializers.ValidationError as e:
            raise serializers.ValidationError({kind: e.detail})

    def to_representation(self, value):
        return {value[0]: value[1]}


class ExpressionField(serializers.Field):
    """Function AST, a dict or a list of dicts; checked against the space in the problem serializer."""

    default_error_messages = {
        "invalid": _("Expected an expression object or a list of them."),
    }

    def to_internal_value(self, data):
        if not isinstance(data, (dict, list)):
            self.fail("invalid")
        return data

    def to_representation(self, value):
        return value
