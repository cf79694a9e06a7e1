#!/usr/bin/env python
# -*- coding:utf-8 -*-
# project : compacta
# filename : problem
# author : ly_13
# date : 3/12/2025

from django.utils.translation import gettext_lazy as _

from rest_framework import serializers

from apps.compacta.compacts import box_compact, compact_of_list, compact_union, net_of_box
from apps.compacta.exceptions import PreconditionViolation
from apps.compacta.hausdorff import FiniteList
from apps.compacta.maps.expressions import ExpressionError, validate_expression
from apps.compacta.serializers.fields import CompactField, ExpressionField, PointField, RationalField, SpaceField
from apps.compacta.services.actions import Action


def _nested(segments, message):
    """{"a": {"b": [message]}} for the pointer segments ["a", "b"]."""
    detail = [message]
    for segment in reversed(segments):
        detail = {segment: detail}
    return detail


def build_compact(description, space):
    kind, value = description
    if kind == "points":
        return compact_of_list(FiniteList(space, [space.point(*coords) for coords in value]))
    if kind == "net_of_box":
        return net_of_box(space, value["box"], value["spacing"])
    if kind == "box":
        return box_compact(space, value)
    left, right = (build_compact(part, space) for part in value)
    return compact_union(left, right)


class ParamsSerializer(serializers.Serializer):
    epsilon = RationalField(positive=True, required=False, label=_("Epsilon"))
    tol = RationalField(positive=True, required=False, label=_("Tolerance"))
    x = PointField(required=False, label=_("Point"))
    y = PointField(required=False, label=_("Value point"))
    budget = serializers.IntegerField(min_value=1, required=False, label=_("Search budget"))
    samples = serializers.IntegerField(min_value=1, required=False, label=_("Soundness samples"))
    seed = serializers.IntegerField(required=False, label=_("Sampling seed"))
    reduce = serializers.BooleanField(
        required=False,
        default=False,
        label=_("Force reduction"),
        help_text=_("Extract the modulus of a real valued map through distance functionals"),
    )


class ProblemSpecSerializer(serializers.Serializer):
    space = SpaceField(label=_("Space"))
    compacts = serializers.ListField(child=CompactField(), min_length=1, max_length=2, label=_("Compacts"))
    function = ExpressionField(required=False, label=_("Function"))
    command = serializers.ChoiceField(choices=Action.choices, label=_("Command"))
    params = ParamsSerializer(required=False, label=_("Parameters"))

    required_params = {
        Action.split: ("x", "epsilon"),
        Action.member: ("x", "tol"),
        Action.modulus: ("epsilon",),
        Action.check: ("epsilon",),
    }

    def validate(self, attrs):
        space = attrs["space"]
        command = Action(attrs["command"])
        params = attrs.setdefault("params", {"reduce": False})

        if command in Action.needs_pair() and len(attrs["compacts"]) != 2:
            raise serializers.ValidationError({"compacts": [_("{} needs two compacts.").format(command.value)]})
        for name in self.required_params.get(command, ()):
            if name not in params:
                raise serializers.ValidationError(_nested(["params", name], _("Required by {}.").format(command.value)))
        if command in Action.needs_function():
            if "function" not in attrs:
                raise serializers.ValidationError({"function": [_("Required by {}.").format(command.value)]})
            try:
                validate_expression(attrs["function"], space.dimension)
            except ExpressionError as e:
                segments = [s for s in e.pointer.split("/") if s]
                raise serializers.ValidationError(_nested(["function"] + segments, str(e.detail)))

        if "x" in params and len(params["x"]) != space.dimension:
            message = _("Expected {} coordinates.").format(space.dimension)
            raise serializers.ValidationError(_nested(["params", "x"], message))
        if "y" in params:
            function = attrs.get("function")
            codomain = len(function) if isinstance(function, list) else 1
            if len(params["y"]) != codomain:
                message = _("Expected {} coordinates.").format(codomain)
                raise serializers.ValidationError(_nested(["params", "y"], message))

        compacts = []
        for i, description in enumerate(attrs["compacts"]):
            try:
                compacts.append(build_compact(description, space))
            except PreconditionViolation as e:
                raise serializers.ValidationError(_nested(["compacts", str(i)], str(e.detail)))
        attrs["compacts"] = compacts
        if "x" in params:
            params["x"] = space.point(*params["x"])
        return attrs
