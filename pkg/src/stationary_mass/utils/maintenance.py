import sys
import time

from stationary_mass.config.type import MassConfig


def cleanup_old_logs(config: MassConfig, days: int = 30) -> int:
  """
  Deletes rotated log files older than the specified number of days.
  Returns the number of files removed.
  """
  limit = time.time() - (days * 86400)
  directory = config.log_dir
  cleaned_count = 0

  for item in directory.rglob('*'):
    if item.is_file():
      try:
        if item.stat().st_mtime < limit:
          item.unlink()
          cleaned_count += 1
      except OSError as e:
        # stderr keeps stdout clean for piped artifacts
        sys.stderr.write(f'Failed to delete {item}: {e}\n')

  if cleaned_count > 0:
    sys.stderr.write(f'Cleanup: Removed {cleaned_count} log files older than {days} days.\n')
  return cleaned_count
