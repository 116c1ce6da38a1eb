from bvh.main import app

app(prog_name="bvh")
