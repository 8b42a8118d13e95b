from .output import OutputRecord, build_record, render, render_verification, save_verification_report
