#!/usr/bin/env python
# -*- coding:utf-8 -*-
# project : compacta
# filename : actions
# author : ly_13
# date : 3/11/2025

from django.db.models import TextChoices
from django.utils.translation import gettext_lazy as _


class Action(TextChoices):
    dist = "dist", _("Distance between two compacts")
    sup = "sup", _("Supremum of a real compact")
    inf = "inf", _("Infimum of a real compact")
    union = "union", _("Union of two compacts")
    split = "split", _("Split a compact by a ball")
    image = "image", _("Image of a compact")
    modulus = "modulus", _("Uniform continuity modulus")
    member = "member", _("Membership verdict")
    check = "check", _("Modulus with soundness sampling")

    @classmethod
    def needs_function(cls):
        return {cls.image, cls.modulus, cls.check}

    @classmethod
    def needs_pair(cls):
        return {cls.dist, cls.union}
