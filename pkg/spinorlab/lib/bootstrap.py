# lib/bootstrap.py
import logging

# Set up logging at the root level
logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
logger = logging.getLogger('spinorlab')
