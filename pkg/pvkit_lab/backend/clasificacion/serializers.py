from rest_framework import serializers
from rest_framework.renderers import JSONRenderer


class RationalField(serializers.Field):
    """Racional como texto: "3/2", "-1", "0"."""

    def to_representation(self, value):
        return str(value)


class InvariantCheckSerializer(serializers.Serializer):
    name = serializers.CharField()
    degree = serializers.IntegerField()
    verified = serializers.BooleanField()
    character = serializers.ListField(child=RationalField())
    points_used = serializers.IntegerField()
    vanishes_on_derived = serializers.BooleanField()
    vanishes_on_isotropy = serializers.BooleanField()
    note = serializers.CharField(allow_blank=True)


class VerificationReportSerializer(serializers.Serializer):
    entry_id = serializers.CharField()
    parameters = serializers.DictField(child=serializers.IntegerField())
    seed = serializers.IntegerField()
    status = serializers.CharField()
    realization = serializers.CharField(allow_blank=True)
    algebra_dim = serializers.IntegerField(allow_null=True)
    space_dim = serializers.IntegerField(allow_null=True)
    isotropy_dim = serializers.IntegerField(allow_null=True)
    character_dim = serializers.IntegerField(allow_null=True)
    qd1 = serializers.BooleanField(allow_null=True)
    regular = serializers.BooleanField(allow_null=True)
    invariants = InvariantCheckSerializer(many=True)
    parabolic = serializers.CharField(allow_null=True)
    diff = serializers.ListField(child=serializers.CharField())
    message = serializers.CharField(allow_blank=True)
    elapsed = serializers.FloatField()


# Resumen de run-all: sin tiempos, para que dos corridas con la misma semilla coincidan byte a byte
class ReportDigestSerializer(serializers.Serializer):
    entry_id = serializers.CharField()
    parameters = serializers.DictField(child=serializers.IntegerField())
    status = serializers.CharField()
    character_dim = serializers.IntegerField(allow_null=True)
    qd1 = serializers.BooleanField(allow_null=True)
    regular = serializers.BooleanField(allow_null=True)


class RunSummarySerializer(serializers.Serializer):
    filter = serializers.CharField()
    seed = serializers.IntegerField()
    counts = serializers.DictField(child=serializers.IntegerField())
    passed = serializers.BooleanField()
    reports = ReportDigestSerializer(many=True)


class CatalogEntrySerializer(serializers.Serializer):
    id = serializers.CharField()
    group = serializers.CharField()
    title = serializers.CharField()
    case = serializers.CharField()
    realization = serializers.CharField()
    parameters = serializers.ListField(child=serializers.CharField())
    defaults = serializers.ListField(child=serializers.DictField(child=serializers.IntegerField()))
    mf_rank = serializers.CharField(allow_null=True)
    requires = serializers.CharField(allow_null=True)


class Table1RowSerializer(serializers.Serializer):
    row = serializers.CharField()
    n = serializers.IntegerField(allow_null=True)
    diagram = serializers.CharField()
    space = serializers.CharField()
    commutative = serializers.BooleanField()
    levi_expected = serializers.CharField()
    levi_observed = serializers.CharField()
    dim_expected = serializers.IntegerField()
    dim_observed = serializers.IntegerField()
    entry = serializers.CharField()
    note = serializers.CharField(allow_blank=True)
    passed = serializers.BooleanField()


class ComponentSerializer(serializers.Serializer):
    circled_root = serializers.IntegerField()
    highest_weight = serializers.CharField()
    dimension = serializers.IntegerField()


class DiagramSerializer(serializers.Serializer):
    diagram = serializers.CharField()
    rendering = serializers.CharField()
    levi = serializers.CharField()
    center_dim = serializers.IntegerField()
    pieces = serializers.DictField(child=serializers.IntegerField())
    commutative = serializers.BooleanField(allow_null=True)
    components = ComponentSerializer(many=True)


def render_json(data) -> str:
    """Un objeto JSON compacto por línea."""
    return JSONRenderer().render(data).decode("utf-8")
