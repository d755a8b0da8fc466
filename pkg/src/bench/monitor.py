"""Sweep progress monitor."""
import logging
import threading


class SweepMonitor:
    """Logs sweep progress from a daemon thread every ``interval`` seconds."""

    def __init__(self, manager, interval: float = 5.0):
        self.manager = manager
        self.interval = interval
        self.logger = logging.getLogger(__name__)
        self.running = False
        self.monitor_thread = None
        self._wake = threading.Event()

    def start_monitoring(self):
        if self.interval <= 0:
            return
        self.running = True
        self._wake.clear()
        self.monitor_thread = threading.Thread(target=self.monitor_loop, name="sweep-monitor")
        self.monitor_thread.daemon = True
        self.monitor_thread.start()

    def stop_monitoring(self):
        self.running = False
        self._wake.set()
        if self.monitor_thread is not None:
            self.monitor_thread.join(timeout=self.interval + 1)
            self.monitor_thread = None

    def report(self):
        done, total, failed = self.manager.progress()
        self.logger.info(f"sweep progress: {done}/{total} trials, {failed} failed")

    def monitor_loop(self):
        while self.running:
            if self._wake.wait(self.interval):
                break
            self.report()
