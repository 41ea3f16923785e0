from roughlab.cli import run

run()
