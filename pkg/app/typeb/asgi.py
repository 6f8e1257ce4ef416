"""
ASGI entry point, served by daphne (see docker-compose.yml).
"""
import os

from django.core.asgi import get_asgi_application

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "typeb.settings")

application = get_asgi_application()
