from django.urls import path
from . import views

urlpatterns = [
    path("stat/", views.StatView.as_view(), name="api-stat"),
    path("rank/", views.RankView.as_view(), name="api-rank"),
    path("unrank/", views.UnrankView.as_view(), name="api-unrank"),
    path("triangle/", views.TriangleView.as_view(), name="api-triangle"),
    path("verify/", views.VerifyView.as_view(), name="api-verify"),
]
