import logging

from apw.config import CONFIG


logging.basicConfig(level=CONFIG["logging"]["level"])
logger = logging.getLogger("apw")
