"""
Read-only HTTP mirror of the management commands.
"""
from __future__ import annotations

import logging

from django.conf import settings
from drf_spectacular.types import OpenApiTypes
from drf_spectacular.utils import extend_schema
from rest_framework import permissions, serializers, status
from rest_framework.response import Response
from rest_framework.views import APIView

from cli.checks import CheckContext, run_checks
from cli.serializers import (
    RankQuerySerializer,
    StatQuerySerializer,
    TriangleQuerySerializer,
    TriangleRowSerializer,
    UnrankQuerySerializer,
    VerificationReportSerializer,
    VerifyQuerySerializer,
)
from cli.statistics import compute_stats
from codes.bijection import rank
from core.exceptions import HyperoctahedralError
from core.permutations import format_window
from enumeration.oracles import enumeration_ceiling
from mahonian.export import rows_as_records, triangle_rows

logger = logging.getLogger(__name__)


def _http_ceiling() -> int:
    return min(settings.API_VERIFY_MAX_N, enumeration_ceiling())


def _validated_query(serializer_class, request):
    ser = serializer_class(data=request.query_params)
    ser.is_valid(raise_exception=True)
    return ser.validated_data


class StatView(APIView):
    permission_classes = [permissions.AllowAny]

    @extend_schema(parameters=[StatQuerySerializer], responses={200: OpenApiTypes.OBJECT})
    def get(self, request):
        data = _validated_query(StatQuerySerializer, request)
        return Response(compute_stats(data["perm"], data["show"]), status=status.HTTP_200_OK)


class RankView(APIView):
    permission_classes = [permissions.AllowAny]

    @extend_schema(parameters=[RankQuerySerializer], responses={200: OpenApiTypes.OBJECT})
    def get(self, request):
        data = _validated_query(RankQuerySerializer, request)
        # decimal string: ranks leave the 53-bit range of JSON numbers for n >= 17
        return Response({"rank": str(rank(data["perm"]))}, status=status.HTTP_200_OK)


class UnrankView(APIView):
    permission_classes = [permissions.AllowAny]

    @extend_schema(parameters=[UnrankQuerySerializer], responses={200: OpenApiTypes.OBJECT})
    def get(self, request):
        data = _validated_query(UnrankQuerySerializer, request)
        return Response({"window": format_window(data["perm"])}, status=status.HTTP_200_OK)


class TriangleView(APIView):
    permission_classes = [permissions.AllowAny]

    @extend_schema(parameters=[TriangleQuerySerializer], responses={200: TriangleRowSerializer(many=True)})
    def get(self, request):
        data = _validated_query(TriangleQuerySerializer, request)
        rows = triangle_rows(data["type"], data["n"])
        records = rows_as_records(rows, with_totals=data["with_totals"])
        return Response(TriangleRowSerializer(records, many=True).data, status=status.HTTP_200_OK)


class VerifyView(APIView):
    """
    Runs a verification suite synchronously. Brute-force checks are capped at
    API_VERIFY_MAX_N (and never above the enumeration ceiling); out-of-range n
    is a 400 and `all` clamps.
    """
    permission_classes = [permissions.AllowAny]

    @extend_schema(parameters=[VerifyQuerySerializer], responses={200: VerificationReportSerializer(many=True)})
    def get(self, request):
        data = _validated_query(VerifyQuerySerializer, request)
        try:
            reports = run_checks(data["check"], data["n"], CheckContext(ceiling=_http_ceiling()))
        except HyperoctahedralError as exc:
            raise serializers.ValidationError({"n": str(exc)})

        failed = [r.check_name for r in reports if not r.passed]
        if failed:
            logger.warning("verify %s n=%s failed: %s", data["check"], data["n"], failed)
        return Response(VerificationReportSerializer(reports, many=True).data, status=status.HTTP_200_OK)
