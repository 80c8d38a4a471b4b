import logging
from functools import wraps
from logging.handlers import TimedRotatingFileHandler

from stationary_mass.config.type import MassConfig

LOG_CONFIG = {
  'file_name': '{name}.log',
  'format': '%(asctime)s [%(levelname)s] %(filename)s:%(lineno)d - %(message)s',
  'backup_count': 30,  # Keep 30 days of logs
}

_configured = False


def string_to_log_level(level: str):
  return logging._nameToLevel.get(level.upper(), logging.INFO)


def configure_logging(config: MassConfig) -> None:
  """
  Attach a daily-rotating file handler to the root logger.

  Safe to call more than once; only the first call installs the handler.
  """
  global _configured
  if _configured:
    return

  log_file = config.log_dir / LOG_CONFIG['file_name'].format(name=config.name)
  handler = TimedRotatingFileHandler(
    log_file,
    when='midnight',
    interval=1,
    backupCount=LOG_CONFIG['backup_count'],
    encoding='utf-8',
  )
  handler.setFormatter(logging.Formatter(LOG_CONFIG['format']))

  root = logging.getLogger()
  root.setLevel(string_to_log_level(config.log_level))
  root.addHandler(handler)
  _configured = True


def with_logging(level: str = 'info'):
  """
  Decorator to log entry, exit, and errors for CLI commands at a given level.
  """

  def decorator(func):
    @wraps(func)
    def wrapper(*args, **kwargs):
      func_name = func.__name__
      level_num = string_to_log_level(level)
      logging.log(level_num, f'Starting command: {func_name}')
      try:
        result = func(*args, **kwargs)
        logging.log(level_num, f'Completed command: {func_name} successfully')
        return result
      except Exception as e:
        logging.exception(f'Error in command {func_name}: {e}')
        raise

    return wrapper

  return decorator
