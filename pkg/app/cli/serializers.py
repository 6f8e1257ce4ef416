from __future__ import annotations

from rest_framework import serializers

from codes.bijection import unrank
from core.exceptions import HyperoctahedralError
from core.permutations import format_window, parse_window
from mahonian.triangles import TriangleKind

from .checks import CHECK_NAMES
from .statistics import parse_show

TRIANGLE_MAX_N = 60
UNRANK_MAX_N = 64


class WindowField(serializers.CharField):
    """Window text such as "7 3 -2 8 -6 -4 -1 5" <-> SignedPermutation."""

    def to_internal_value(self, data):
        text = super().to_internal_value(data)
        try:
            return parse_window(text)
        except HyperoctahedralError as exc:
            raise serializers.ValidationError(str(exc))

    def to_representation(self, value):
        return format_window(value)


class StatQuerySerializer(serializers.Serializer):
    perm = WindowField()
    show = serializers.CharField(required=False, allow_blank=True, default="")

    def validate_show(self, value: str) -> list[str]:
        try:
            return parse_show(value)
        except HyperoctahedralError as exc:
            raise serializers.ValidationError(str(exc))


class RankQuerySerializer(serializers.Serializer):
    perm = WindowField()


class UnrankQuerySerializer(serializers.Serializer):
    n = serializers.IntegerField(min_value=1, max_value=UNRANK_MAX_N)
    rank = serializers.IntegerField(min_value=0)

    def validate(self, attrs):
        try:
            attrs["perm"] = unrank(attrs["rank"], attrs["n"])
        except HyperoctahedralError as exc:
            raise serializers.ValidationError({"rank": str(exc)})
        return attrs


class TriangleQuerySerializer(serializers.Serializer):
    type = serializers.ChoiceField(choices=TriangleKind.choices)
    n = serializers.IntegerField(min_value=1, max_value=TRIANGLE_MAX_N)
    with_totals = serializers.BooleanField(required=False, default=False)


class VerifyQuerySerializer(serializers.Serializer):
    check = serializers.ChoiceField(choices=CHECK_NAMES)
    n = serializers.IntegerField()


class TriangleRowSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    kind = serializers.CharField()
    coeffs = serializers.ListField(child=serializers.IntegerField())
    total = serializers.IntegerField(required=False)


class VerificationReportSerializer(serializers.Serializer):
    check_name = serializers.CharField()
    params = serializers.DictField()
    passed = serializers.BooleanField()
    first_failure = serializers.CharField(allow_null=True)
    elapsed = serializers.FloatField()
